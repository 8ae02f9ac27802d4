// Orbits of subgroups under conjugation and one representative per orbit.

#ifndef BRACEFORGE_DEDUP_HPP_
#define BRACEFORGE_DEDUP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

// The orbit of h under conjugation by <conjugators>, sorted. Throws
// CapacityError past `bound` members.
std::vector<Subgroup> conjugation_orbit(const GroupSpec& spec, const Subgroup& h,
                                        std::span<const HolElement> conjugators,
                                        std::size_t bound = std::size_t{1} << 20);

struct OrbitRepresentative {
  Subgroup representative;  // least member of its orbit
  std::size_t orbit_size;
};

// One entry per orbit met by `list`, sorted by representative.
std::vector<OrbitRepresentative> orbit_representatives(const GroupSpec& spec,
                                                       std::span<const Subgroup> list,
                                                       std::span<const HolElement> conjugators);

// Just the representatives of orbit_representatives.
std::vector<Subgroup> dedup_under_group(const GroupSpec& spec, std::span<const Subgroup> list,
                                        std::span<const HolElement> conjugators);

// The conjugators (0, a) for a in the standard generators of Aut(G).
std::vector<HolElement> aut_conjugators(const GroupSpec& spec);

}  // namespace braceforge

#endif  // BRACEFORGE_DEDUP_HPP_
