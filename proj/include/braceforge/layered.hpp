// Subgroups of a soluble group S of a given order, found layer by layer
// along an elementary abelian normal series and kept up to S-conjugacy.

#ifndef BRACEFORGE_LAYERED_HPP_
#define BRACEFORGE_LAYERED_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "braceforge/complements.hpp"
#include "braceforge/holomorph.hpp"

namespace braceforge {

struct LayeredOptions {
  // Checkpoints go here after every layer when set.
  std::optional<std::filesystem::path> checkpoint_dir;
  // Continue from the newest checkpoint in checkpoint_dir.
  bool resume = false;
  ComplementOptions complement_options;
  // Called after each candidate of a layer is processed, with the layer
  // number, the candidates done so far and the layer's candidate count.
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
  // Sees every complement problem (A, N, B) together with its answer.
  std::function<void(const Subgroup&, const Subgroup&, const Subgroup&,
                     const std::vector<Subgroup>&)>
      on_complements;
};

struct LayerStats {
  std::size_t candidates = 0;       // subgroups produced before pruning
  std::size_t size_pruned = 0;
  std::size_t transitivity_pruned = 0;
  std::size_t classes = 0;          // S-classes kept
};

struct LayeredResult {
  std::vector<Subgroup> classes;
  std::vector<LayerStats> layers;
  std::size_t resumed_from = 0;     // layer loaded from a checkpoint, 0 for a fresh run
};

// All subgroups of S of order `target` whose orbit on G is everything, one
// per S-conjugacy class (the least member), sorted.
LayeredResult enumerate_layered(const GroupSpec& spec, const Subgroup& s, std::uint64_t target,
                                const LayeredOptions& options = {});

}  // namespace braceforge

#endif  // BRACEFORGE_LAYERED_HPP_
