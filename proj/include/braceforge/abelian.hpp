// Finite abelian groups presented as direct products of cyclic groups.
//
// A group is described by a GroupSpec (the orders of its cyclic factors, in
// the order given by the user) and its elements are residue vectors. The
// lexicographic order on residue vectors is the tiebreaker used by every
// canonical encoding downstream.

#ifndef BRACEFORGE_ABELIAN_HPP_
#define BRACEFORGE_ABELIAN_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braceforge {

// Largest number of cyclic factors supported. Elements and matrices are
// stored inline so that holomorph arithmetic never allocates.
inline constexpr std::size_t kMaxRank = 6;

// Default bound on how many group elements may be listed explicitly.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 22;

class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> factors);

  // Parses "4,4,4".
  static GroupSpec parse(std::string_view text);

  std::span<const std::int64_t> factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t factor(std::size_t i) const { return factors_[i]; }
  std::uint64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

  // Invariant-factor form: d1 | d2 | ... with the same isomorphism type.
  GroupSpec canonical() const;

  // The prime p when the order is a power of p (p^0 = 1 is not a p-group).
  std::optional<std::int64_t> p_group_prime() const;

  // True when all factors are equal, as in C4 x C4 x C4.
  bool is_homocyclic() const;

  std::string to_string() const;

  bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::uint64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

// A residue vector. Entries beyond `rank` are always zero so the defaulted
// comparison is the lexicographic order on the coordinates.
struct GroupElement {
  std::array<std::int32_t, kMaxRank> coords{};
  std::uint8_t rank = 0;

  std::int32_t operator[](std::size_t i) const { return coords[i]; }
  std::int32_t& operator[](std::size_t i) { return coords[i]; }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

GroupElement zero_element(const GroupSpec& spec);

// Builds an element from residues, reducing each modulo its factor.
GroupElement make_element(const GroupSpec& spec, std::span<const std::int64_t> residues);

// The i-th standard generator (1 in factor i).
GroupElement basis_element(const GroupSpec& spec, std::size_t i);

bool is_valid_element(const GroupSpec& spec, const GroupElement& a);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& spec, const GroupElement& a);
GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement scale(const GroupSpec& spec, std::int64_t k, const GroupElement& a);
std::int64_t element_order(const GroupSpec& spec, const GroupElement& a);

// All elements in lexicographic order. Throws CapacityError above `bound`.
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec,
                                             std::uint64_t bound = kDefaultEnumerationBound);

// Position of `a` in the lexicographic enumeration, and its inverse.
std::uint64_t element_index(const GroupSpec& spec, const GroupElement& a);
GroupElement element_at(const GroupSpec& spec, std::uint64_t index);

// "1,2,3". Parsing rejects wrong lengths and out-of-range residues.
std::string format_element(const GroupElement& a);
GroupElement parse_element(const GroupSpec& spec, std::string_view text);

// Small integer helpers shared by the other modules.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);
// p when n = p^k with k >= 1.
std::optional<std::int64_t> prime_of_power(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::int64_t p);

std::vector<std::int64_t> parse_integer_list(std::string_view text, char separator);

}  // namespace braceforge

#endif  // BRACEFORGE_ABELIAN_HPP_
