// Normal series with elementary abelian factors, and the coordinates of an
// elementary abelian section N/M as a vector space over GF(p).

#ifndef BRACEFORGE_SERIES_HPP_
#define BRACEFORGE_SERIES_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "braceforge/holomorph.hpp"
#include "braceforge/linear_gfp.hpp"

namespace braceforge {

// S = terms[0] >= terms[1] >= ... >= terms.back() = 1, every term normal in
// S, and terms[i] / terms[i+1] elementary abelian of exponent primes[i].
struct NormalSeries {
  std::vector<Subgroup> terms;
  std::vector<std::int64_t> primes;
};

// Lower p-central series N_{i+1} = [N_i, S] N_i^p for a p-group S. Other
// soluble groups get the derived series refined by power subgroups; a
// non-soluble S raises DomainError.
NormalSeries elementary_abelian_series(const GroupSpec& spec, const Subgroup& s);

// Checks normality in S, the chain property and elementary abelian factors.
bool is_elementary_abelian_series(const GroupSpec& spec, const Subgroup& s,
                                  const NormalSeries& series);

// Whether upper / lower is elementary abelian of exponent p (lower normal in upper).
bool is_elementary_abelian_section(const GroupSpec& spec, const Subgroup& upper,
                                   const Subgroup& lower, std::int64_t p);

// Smallest normal subgroup of <ambient> containing `gens`.
Subgroup normal_closure(const GroupSpec& spec, std::span<const HolElement> gens,
                        std::span<const HolElement> ambient);

// [X, Y] for subgroups generated by `xs` and `ys`, inside <ambient>, where
// <ambient> contains both and normalises the result.
Subgroup commutator_subgroup(const GroupSpec& spec, std::span<const HolElement> xs,
                             std::span<const HolElement> ys, std::span<const HolElement> ambient);

// A descending chain A = X_0 > X_1 > ... > X_k = N of subgroups normal in A
// with elementary abelian factors. N must be normal in A and A/N soluble.
std::vector<Subgroup> relative_elementary_series(const GroupSpec& spec, const Subgroup& a,
                                                 const Subgroup& n);

// The elementary abelian section N/M as GF(p)^dim. basis[i] are elements of
// N whose images form a basis; coordinates() maps any element of N.
class SectionSpace {
 public:
  SectionSpace(const GroupSpec& spec, const Subgroup& n, const Subgroup& m, std::int64_t p);

  std::size_t dimension() const { return basis_.size(); }
  std::int64_t prime() const { return p_; }
  std::span<const HolElement> basis() const { return basis_; }

  // Coordinates of an element of N; throws ContractError outside N.
  const gfp::Vector& coordinates(const HolElement& x) const;

  // An element of N with the given coordinates (product of basis powers).
  HolElement lift(const GroupSpec& spec, const gfp::Vector& v) const;

 private:
  std::int64_t p_;
  std::vector<HolElement> basis_;
  std::unordered_map<HolElement, gfp::Vector, HolElementHash> coords_;
};

}  // namespace braceforge

#endif  // BRACEFORGE_SERIES_HPP_
