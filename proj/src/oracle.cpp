#include "braceforge/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "braceforge/dedup.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/regularity.hpp"

namespace braceforge {

std::vector<Subgroup> brute_force_regular_oracle(const GroupSpec& spec, std::int64_t p,
                                                 std::size_t bound) {
  const Subgroup s = closure(spec, sylow_p_hol_generators(spec, p), bound);
  const std::uint64_t target = spec.order();

  // Grow subgroups one generator at a time. Only subgroups meeting Aut(G)
  // trivially can lie in a regular one, and adding x whose translation part
  // is already in the orbit of 0 would break that.
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> frontier{trivial_subgroup(spec)};
  seen.insert(frontier.front());
  std::set<Subgroup> regular;
  while (!frontier.empty()) {
    std::vector<Subgroup> grown;
    for (const Subgroup& h : frontier) {
      if (h.order() == target) {
        regular.insert(h);
        continue;
      }
      const std::vector<GroupElement> orbit = orbit_of_zero(spec, h);
      for (const HolElement& x : s.elements()) {
        if (std::binary_search(orbit.begin(), orbit.end(), x.g)) continue;
        const HolElement single[] = {x};
        Subgroup k = closure_with(spec, h, single);
        if (k.order() > target || !has_trivial_stabilizer(spec, k)) continue;
        if (seen.insert(k).second) grown.push_back(std::move(k));
      }
    }
    frontier = std::move(grown);
  }

  std::vector<Subgroup> hits;
  for (const Subgroup& h : regular)
    if (is_regular(spec, h)) hits.push_back(h);
  const std::vector<HolElement> conjugators = aut_conjugators(spec);
  std::set<Subgroup> saturated;
  for (const Subgroup& h : hits) {
    if (saturated.count(h)) continue;
    for (Subgroup& k : conjugation_orbit(spec, h, conjugators)) saturated.insert(std::move(k));
  }
  return {saturated.begin(), saturated.end()};
}

}  // namespace braceforge
