// Layer checkpoints of the layered enumeration, one text file per layer.

#ifndef BRACEFORGE_CHECKPOINT_HPP_
#define BRACEFORGE_CHECKPOINT_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "braceforge/holomorph.hpp"

namespace braceforge {

inline constexpr int kCheckpointFormatVersion = 1;

// The candidate list after `layer` layers have been processed.
struct LayerState {
  GroupSpec spec;
  std::size_t layer = 0;
  std::vector<Subgroup> classes;
  int format_version = kCheckpointFormatVersion;

  bool operator==(const LayerState&) const = default;
};

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::size_t layer);

// Writes layer-<k>.ckpt through a temporary file and a rename.
void checkpoint_save(const LayerState& state, const std::filesystem::path& dir);

// Reads one checkpoint file. IntegrityError on a wrong version, a spec other
// than `spec`, a malformed record or a missing or wrong count footer.
LayerState checkpoint_load_file(const GroupSpec& spec, const std::filesystem::path& file);

// The checkpoint with the highest layer in `dir`, if any.
std::optional<LayerState> checkpoint_load(const GroupSpec& spec, const std::filesystem::path& dir);

}  // namespace braceforge

#endif  // BRACEFORGE_CHECKPOINT_HPP_
