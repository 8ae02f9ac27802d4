// Orbit and stabiliser of 0 under a subgroup of Hol(G), the regularity
// predicates, and the two pruning filters of the layered enumeration.

#ifndef BRACEFORGE_REGULARITY_HPP_
#define BRACEFORGE_REGULARITY_HPP_

#include <cstdint>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

// {x * 0 : x in H} = {projection(x) : x in H}, sorted.
std::vector<GroupElement> orbit_of_zero(const GroupSpec& spec, const Subgroup& h);

// H intersected with Aut(G): the elements with zero translation part.
Subgroup stabilizer_of_zero(const GroupSpec& spec, const Subgroup& h);

bool has_trivial_stabilizer(const GroupSpec& spec, const Subgroup& h);
bool has_surjective_projection(const GroupSpec& spec, const Subgroup& h);

// |H| = |G| and H meets Aut(G) trivially.
bool is_regular(const GroupSpec& spec, const Subgroup& h);

// Regularity from the definition: for every pair (k, h) of points exactly
// one element of H maps k to h.
bool is_regular_by_definition(const GroupSpec& spec, const Subgroup& h);

// Whether a regular subgroup can still lie below V: the orbit of 0 under V
// is all of G.
bool transitive_preimage_filter(const GroupSpec& spec, const Subgroup& v);

// Whether a subgroup of order `target` can still project onto a candidate
// whose image has order `candidate_order`, when the kernel still to be
// refined has order `remaining_kernel_order`.
bool size_filter(std::uint64_t candidate_order, std::uint64_t remaining_kernel_order,
                 std::uint64_t target);

}  // namespace braceforge

#endif  // BRACEFORGE_REGULARITY_HPP_
