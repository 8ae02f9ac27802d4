// Automorphisms of a finite abelian group as integer matrices.
//
// Entry (i, j) is the coefficient of factor i in the image of the j-th
// standard generator, reduced modulo factors[i]. A matrix is well defined
// when factors[i] divides entry(i, j) * factors[j]; it is an automorphism
// when it is also bijective.

#ifndef BRACEFORGE_AUTOMORPHISM_HPP_
#define BRACEFORGE_AUTOMORPHISM_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braceforge/abelian.hpp"

namespace braceforge {

// Row-major n x n matrix stored inline; unused entries stay zero.
struct Automorphism {
  std::array<std::int32_t, kMaxRank * kMaxRank> entries{};
  std::uint8_t rank = 0;

  std::int32_t at(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
  std::int32_t& at(std::size_t i, std::size_t j) { return entries[i * rank + j]; }

  auto operator<=>(const Automorphism&) const = default;
  bool operator==(const Automorphism&) const = default;
};

struct AutomorphismHash {
  std::size_t operator()(const Automorphism& a) const noexcept;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

Automorphism identity_automorphism(const GroupSpec& spec);

// Validated construction; throws ValidityError unless `rows` is an automorphism.
Automorphism make_automorphism(const GroupSpec& spec, const IntMatrix& rows);

// Construction without the bijectivity check (entries are still reduced).
Automorphism make_matrix_unchecked(const GroupSpec& spec, const IntMatrix& rows);

IntMatrix to_rows(const Automorphism& a);

bool is_well_defined(const GroupSpec& spec, const IntMatrix& m);
bool is_automorphism(const GroupSpec& spec, const IntMatrix& m);
bool is_automorphism(const GroupSpec& spec, const Automorphism& a);

GroupElement apply(const GroupSpec& spec, const Automorphism& phi, const GroupElement& a);
Automorphism compose(const GroupSpec& spec, const Automorphism& phi, const Automorphism& psi);
Automorphism invert(const GroupSpec& spec, const Automorphism& phi);

// Every automorphism, in lexicographic order, by filtering all well-defined
// matrices. Throws CapacityError when there are more than `bound` matrices.
std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& spec,
                                                  std::uint64_t bound = std::uint64_t{1} << 22);

// Closure of `gens` under composition, sorted.
std::vector<Automorphism> generate_matrix_group(const GroupSpec& spec,
                                                std::span<const Automorphism> gens,
                                                std::uint64_t bound = std::uint64_t{1} << 22);

// Generators of Aut(G). Homocyclic groups get elementary transvections and
// diagonal units; everything else is found by brute force.
std::vector<Automorphism> aut_generators(const GroupSpec& spec);

// Generators of a Sylow p-subgroup of Aut(G). For a homocyclic p-group this
// is the preimage of the upper unitriangular matrices modulo p.
std::vector<Automorphism> sylow_p_aut_generators(const GroupSpec& spec, std::int64_t p);

// Order of Aut(G), by formula for homocyclic p-groups and brute force otherwise.
std::uint64_t aut_order(const GroupSpec& spec);

// "1,1;0,1"
std::string format_matrix(const Automorphism& a);
IntMatrix parse_int_matrix(std::string_view text);
Automorphism parse_automorphism(const GroupSpec& spec, std::string_view text);

}  // namespace braceforge

#endif  // BRACEFORGE_AUTOMORPHISM_HPP_
