// Exhaustive reference enumeration of regular subgroups, for small groups.

#ifndef BRACEFORGE_ORACLE_HPP_
#define BRACEFORGE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

inline constexpr std::size_t kOracleBound = std::size_t{1} << 12;

// Every regular subgroup of Hol(G), sorted. G must be a p-group; the search
// runs inside the Sylow p-subgroup of Hol(G) (CapacityError when its order
// exceeds `bound`) and the hits are closed under Aut(G)-conjugation.
std::vector<Subgroup> brute_force_regular_oracle(const GroupSpec& spec, std::int64_t p,
                                                 std::size_t bound = kOracleBound);

}  // namespace braceforge

#endif  // BRACEFORGE_ORACLE_HPP_
