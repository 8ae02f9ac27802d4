#include "braceforge/dedup.hpp"

#include <algorithm>
#include <unordered_set>

#include "braceforge/errors.hpp"

namespace braceforge {

std::vector<Subgroup> conjugation_orbit(const GroupSpec& spec, const Subgroup& h,
                                        std::span<const HolElement> conjugators,
                                        std::size_t bound) {
  std::vector<HolElement> inverses;
  for (const HolElement& x : conjugators) inverses.push_back(hol_inv(spec, x));
  std::unordered_set<Subgroup, SubgroupHash> seen{h};
  std::vector<Subgroup> orbit{h};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t c = 0; c < conjugators.size(); ++c) {
      Subgroup k = conjugate_subgroup(spec, conjugators[c], inverses[c], orbit[i]);
      if (!seen.insert(k).second) continue;
      if (orbit.size() >= bound)
        throw CapacityError("conjugation orbit exceeds " + std::to_string(bound) + " subgroups");
      orbit.push_back(std::move(k));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<OrbitRepresentative> orbit_representatives(const GroupSpec& spec,
                                                       std::span<const Subgroup> list,
                                                       std::span<const HolElement> conjugators) {
  std::unordered_set<Subgroup, SubgroupHash> covered;
  std::vector<OrbitRepresentative> out;
  for (const Subgroup& h : list) {
    if (covered.count(h)) continue;
    std::vector<Subgroup> orbit = conjugation_orbit(spec, h, conjugators);
    const std::size_t size = orbit.size();
    Subgroup least = orbit.front();
    for (Subgroup& k : orbit) covered.insert(std::move(k));
    out.push_back({std::move(least), size});
  }
  std::sort(out.begin(), out.end(), [](const OrbitRepresentative& a, const OrbitRepresentative& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::vector<Subgroup> dedup_under_group(const GroupSpec& spec, std::span<const Subgroup> list,
                                        std::span<const HolElement> conjugators) {
  std::vector<Subgroup> out;
  for (OrbitRepresentative& r : orbit_representatives(spec, list, conjugators))
    out.push_back(std::move(r.representative));
  return out;
}

std::vector<HolElement> aut_conjugators(const GroupSpec& spec) {
  std::vector<HolElement> out;
  for (const Automorphism& a : aut_generators(spec)) out.push_back(pure_automorphism(spec, a));
  return out;
}

}  // namespace braceforge
