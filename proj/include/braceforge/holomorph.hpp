// The holomorph Hol(G) = G x| Aut(G) of a finite abelian group, its affine
// action on G, and explicitly listed subgroups of it.

#ifndef BRACEFORGE_HOLOMORPH_HPP_
#define BRACEFORGE_HOLOMORPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braceforge/abelian.hpp"
#include "braceforge/automorphism.hpp"

namespace braceforge {

// Default bound on the order of any explicitly listed subgroup.
inline constexpr std::size_t kDefaultClosureBound = std::size_t{1} << 21;

// The pair (g, alpha). The defaulted order compares g first, then the matrix
// row by row; this is the canonical element order.
struct HolElement {
  GroupElement g;
  Automorphism alpha;

  auto operator<=>(const HolElement&) const = default;
  bool operator==(const HolElement&) const = default;
};

struct HolElementHash {
  std::size_t operator()(const HolElement& x) const noexcept;
};

HolElement hol_identity(const GroupSpec& spec);
HolElement translation(const GroupSpec& spec, const GroupElement& g);
HolElement pure_automorphism(const GroupSpec& spec, const Automorphism& alpha);

// (g, a)(h, b) = (g + a(h), a o b)
HolElement hol_mul(const GroupSpec& spec, const HolElement& x, const HolElement& y);
// (g, a)^-1 = (-a^-1(g), a^-1)
HolElement hol_inv(const GroupSpec& spec, const HolElement& x);
// x y x^-1 where `x_inv` is the precomputed inverse of x.
HolElement hol_conj(const GroupSpec& spec, const HolElement& x, const HolElement& x_inv,
                    const HolElement& y);
// (g, a) * h = g + a(h)
GroupElement hol_act(const GroupSpec& spec, const HolElement& x, const GroupElement& h);
HolElement hol_pow(const GroupSpec& spec, const HolElement& x, std::int64_t k);

// The translation part. Not a homomorphism.
inline const GroupElement& projection(const HolElement& x) { return x.g; }

// "1,2,3 | 1,0,0;0,1,0;0,0,1"
std::string format_hol(const HolElement& x);
HolElement parse_hol(const GroupSpec& spec, std::string_view text);

// Elements joined by ';'. Parsing splits at the tokens carrying a '|'.
std::string format_hol_list(std::span<const HolElement> xs);
std::vector<HolElement> parse_hol_list(const GroupSpec& spec, std::string_view text);

// A subgroup of Hol(G) listed by its elements in canonical order. Two
// subgroups are equal exactly when their element lists are, and the
// lexicographic order on those lists is the canonical subgroup order.
class Subgroup {
 public:
  Subgroup() = default;

  // `elements` must be sorted, duplicate free and closed.
  static Subgroup from_sorted(std::vector<HolElement> elements,
                              std::vector<HolElement> generators = {});

  std::span<const HolElement> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const HolElement& x) const;
  bool is_subset_of(const Subgroup& other) const;

  // Generators remembered from construction; may be empty for a nontrivial
  // subgroup built with from_sorted. Not part of the identity of the subgroup.
  std::span<const HolElement> known_generators() const { return generators_; }

  std::strong_ordering operator<=>(const Subgroup& other) const {
    return elements_ <=> other.elements_;
  }
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  std::vector<HolElement> elements_;
  std::vector<HolElement> generators_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const noexcept;
};

// Smallest subgroup containing `gens`, by breadth-first product saturation.
// Throws CapacityError if it grows beyond `bound` elements.
Subgroup closure(const GroupSpec& spec, std::span<const HolElement> gens,
                 std::size_t bound = kDefaultClosureBound);

// Closure of `base` together with extra generators.
Subgroup closure_with(const GroupSpec& spec, const Subgroup& base,
                      std::span<const HolElement> extra, std::size_t bound = kDefaultClosureBound);

// A small generating set, chosen greedily in canonical order.
std::vector<HolElement> generating_set(const GroupSpec& spec, const Subgroup& h);

// Remembered generators when present, otherwise generating_set.
std::vector<HolElement> generators_of(const GroupSpec& spec, const Subgroup& h);

// Generators of `h` modulo the normal subgroup `n` (chosen greedily).
std::vector<HolElement> generators_modulo(const GroupSpec& spec, const Subgroup& h,
                                          const Subgroup& n);

Subgroup trivial_subgroup(const GroupSpec& spec);

// T = {(g, 1)}, the translations.
Subgroup translations_subgroup(const GroupSpec& spec,
                               std::uint64_t bound = kDefaultEnumerationBound);

// Standard generators of T followed by (0, m) for m in the Sylow p-subgroup
// generators of Aut(G).
std::vector<HolElement> sylow_p_hol_generators(const GroupSpec& spec, std::int64_t p);

// x H x^-1 in canonical form.
Subgroup conjugate_subgroup(const GroupSpec& spec, const HolElement& x, const Subgroup& h);
Subgroup conjugate_subgroup(const GroupSpec& spec, const HolElement& x, const HolElement& x_inv,
                            const Subgroup& h);

bool is_normal_in(const GroupSpec& spec, const Subgroup& n, std::span<const HolElement> gens);

}  // namespace braceforge

#endif  // BRACEFORGE_HOLOMORPH_HPP_
