#include "braceforge/regularity.hpp"

#include <algorithm>
#include <unordered_set>

#include "braceforge/errors.hpp"

namespace braceforge {

std::vector<GroupElement> orbit_of_zero(const GroupSpec& spec, const Subgroup& h) {
  std::vector<GroupElement> orbit;
  orbit.reserve(h.order());
  for (const HolElement& x : h.elements()) orbit.push_back(hol_act(spec, x, zero_element(spec)));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

Subgroup stabilizer_of_zero(const GroupSpec& spec, const Subgroup& h) {
  const GroupElement zero = zero_element(spec);
  std::vector<HolElement> stab;
  for (const HolElement& x : h.elements())
    if (x.g == zero) stab.push_back(x);
  return Subgroup::from_sorted(std::move(stab));
}

bool has_trivial_stabilizer(const GroupSpec& spec, const Subgroup& h) {
  const GroupElement zero = zero_element(spec);
  return std::count_if(h.elements().begin(), h.elements().end(),
                       [&](const HolElement& x) { return x.g == zero; }) == 1;
}

bool has_surjective_projection(const GroupSpec& spec, const Subgroup& h) {
  if (h.order() < spec.order()) return false;
  return orbit_of_zero(spec, h).size() == spec.order();
}

bool is_regular(const GroupSpec& spec, const Subgroup& h) {
  return h.order() == spec.order() && has_trivial_stabilizer(spec, h);
}

bool is_regular_by_definition(const GroupSpec& spec, const Subgroup& h) {
  const std::vector<GroupElement> points = enumerate_elements(spec);
  for (const GroupElement& k : points) {
    std::vector<std::uint64_t> hits(spec.order(), 0);
    for (const HolElement& x : h.elements()) ++hits[element_index(spec, hol_act(spec, x, k))];
    if (std::any_of(hits.begin(), hits.end(), [](std::uint64_t c) { return c != 1; }))
      return false;
  }
  return true;
}

bool transitive_preimage_filter(const GroupSpec& spec, const Subgroup& v) {
  return has_surjective_projection(spec, v);
}

bool size_filter(std::uint64_t candidate_order, std::uint64_t remaining_kernel_order,
                 std::uint64_t target) {
  if (candidate_order == 0 || remaining_kernel_order == 0 || target == 0)
    throw ContractError("size_filter arguments must be positive");
  if (target % candidate_order != 0) return false;
  // candidate_order >= target / remaining_kernel_order, without rounding.
  return candidate_order * remaining_kernel_order >= target;
}

}  // namespace braceforge
