// Complements of an elementary abelian section: all U <= A with UN = A and
// U meeting N exactly in B.

#ifndef BRACEFORGE_COMPLEMENTS_HPP_
#define BRACEFORGE_COMPLEMENTS_HPP_

#include <cstddef>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

struct ComplementOptions {
  // Largest number of complements that may be materialised.
  std::size_t max_complements = std::size_t{1} << 16;
};

// Complements of N/B in A/B lifted to subgroups of A, sorted.
//
// A polycyclic presentation of A/N is read off a composition series, and a
// complement is the choice of one element a_j n_j in each generator coset
// satisfying every relation modulo B. With V = N/B written additively the
// relations become the linear system r + L(n) = 0 over GF(p), whose
// solutions are exactly the complements.
//
// Requires B <= N <= A, B and N normal in A, and N/B elementary abelian.
std::vector<Subgroup> complements(const GroupSpec& spec, const Subgroup& a, const Subgroup& n,
                                  const Subgroup& b, const ComplementOptions& options = {});

// The same set found by exhaustive search: every choice of coset
// representatives for a generating set of A modulo N is closed with B and
// kept when it meets N in B and has the right order. Shares no code with
// the linear route.
std::vector<Subgroup> complements_brute_force(const GroupSpec& spec, const Subgroup& a,
                                              const Subgroup& n, const Subgroup& b);

}  // namespace braceforge

#endif  // BRACEFORGE_COMPLEMENTS_HPP_
