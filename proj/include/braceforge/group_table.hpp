// Finite groups given by multiplication tables: isomorphism invariants and
// an exact isomorphism test.

#ifndef BRACEFORGE_GROUP_TABLE_HPP_
#define BRACEFORGE_GROUP_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

inline constexpr std::size_t kGroupTableBound = 4096;

// Elements 0..n-1, mul[a][b] = ab. identity is any index.
struct GroupTable {
  std::vector<std::vector<std::uint32_t>> mul;
  std::uint32_t identity = 0;

  std::size_t order() const { return mul.size(); }
};

// ContractError unless the table is a group of order at most kGroupTableBound.
void validate_group_table(const GroupTable& t);

// The subgroup with its elements in canonical order.
GroupTable table_of(const GroupSpec& spec, const Subgroup& h);

struct Fingerprint {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> abelianization;    // invariant factors, ascending
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::vector<std::uint64_t> class_sizes;       // sorted

  // A single-line text form, equal for equal fingerprints.
  std::string canonical() const;
  // 16 hex digits of the FNV-1a hash of canonical().
  std::string id() const;

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint group_fingerprint(const GroupTable& t);

bool are_isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace braceforge

#endif  // BRACEFORGE_GROUP_TABLE_HPP_
