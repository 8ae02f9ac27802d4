#include "braceforge/layered.hpp"

#include <algorithm>

#include "braceforge/checkpoint.hpp"
#include "braceforge/dedup.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/linear_gfp.hpp"
#include "braceforge/regularity.hpp"
#include "braceforge/series.hpp"

namespace braceforge {

namespace {

// Subgroups B with M <= B <= N, given by the subspaces of N/M.
std::vector<Subgroup> intermediate_subgroups(const GroupSpec& spec, const Subgroup& n,
                                             const Subgroup& m, std::int64_t p) {
  const SectionSpace space(spec, n, m, p);
  std::vector<Subgroup> out;
  for (const gfp::Matrix& basis : gfp::enumerate_subspaces(space.dimension(), p)) {
    std::vector<HolElement> gens;
    for (const gfp::Vector& row : basis) gens.push_back(space.lift(spec, row));
    out.push_back(closure_with(spec, m, gens));
  }
  return out;
}

}  // namespace

LayeredResult enumerate_layered(const GroupSpec& spec, const Subgroup& s, std::uint64_t target,
                                const LayeredOptions& options) {
  if (target == 0 || s.order() % target != 0)
    throw ContractError("target " + std::to_string(target) + " does not divide |S| = " +
                        std::to_string(s.order()));
  if (target == 1) return {{trivial_subgroup(spec)}, {}, 0};
  const NormalSeries series = elementary_abelian_series(spec, s);
  const std::vector<HolElement> s_gens = generators_of(spec, s);
  const std::size_t depth = series.primes.size();

  LayeredResult result;
  std::vector<Subgroup> current{s};
  std::size_t start = 0;
  if (options.resume && options.checkpoint_dir) {
    if (auto state = checkpoint_load(spec, *options.checkpoint_dir)) {
      const std::filesystem::path file = checkpoint_path(*options.checkpoint_dir, state->layer);
      if (state->layer > depth)
        throw IntegrityError(file.string() + ": layer beyond the series length");
      for (const Subgroup& h : state->classes)
        if (!series.terms[state->layer].is_subset_of(h) || !h.is_subset_of(s))
          throw IntegrityError(file.string() + ": record does not lie between N_" +
                               std::to_string(state->layer) + " and S");
      current = std::move(state->classes);
      start = state->layer;
      result.resumed_from = start;
    }
  }
  result.layers.resize(depth);

  for (std::size_t layer = start; layer < depth; ++layer) {
    const Subgroup& n = series.terms[layer];
    const Subgroup& m = series.terms[layer + 1];
    const std::vector<Subgroup> middles = intermediate_subgroups(spec, n, m, series.primes[layer]);
    LayerStats& stats = result.layers[layer];
    std::vector<Subgroup> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Subgroup& u = current[i];
      const std::vector<HolElement> u_gens = generators_of(spec, u);
      for (const Subgroup& b : middles) {
        // Every complement has order |U||B|/|N|; skip hopeless B early.
        const std::uint64_t order = u.order() / n.order() * b.order();
        if (!size_filter(order / m.order(), m.order(), target)) {
          ++stats.size_pruned;
          continue;
        }
        if (!is_normal_in(spec, b, u_gens)) continue;
        std::vector<Subgroup> found = complements(spec, u, n, b, options.complement_options);
        if (options.on_complements) options.on_complements(u, n, b, found);
        for (Subgroup& v : found) {
          ++stats.candidates;
          if (!transitive_preimage_filter(spec, v)) {
            ++stats.transitivity_pruned;
            continue;
          }
          next.push_back(std::move(v));
        }
      }
      if (options.progress) options.progress(layer, i + 1, current.size());
    }
    current = dedup_under_group(spec, next, s_gens);
    stats.classes = current.size();
    if (options.checkpoint_dir) checkpoint_save({spec, layer + 1, current}, *options.checkpoint_dir);
  }

  // Final check: exact order and transitivity.
  for (Subgroup& h : current)
    if (h.order() == target && transitive_preimage_filter(spec, h))
      result.classes.push_back(std::move(h));
  std::sort(result.classes.begin(), result.classes.end());
  return result;
}

}  // namespace braceforge
