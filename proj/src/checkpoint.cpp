#include "braceforge/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

constexpr std::string_view kMagic = "BRACEFORGE-CKPT";

[[noreturn]] void corrupt(const std::filesystem::path& file, const std::string& what) {
  throw IntegrityError(file.string() + ": " + what);
}

std::size_t parse_count(const std::filesystem::path& file, const std::string& line,
                        std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (line.rfind(prefix, 0) != 0) corrupt(file, "expected '" + prefix + "<n>'");
  const std::string digits = line.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    corrupt(file, "bad number in '" + line + "'");
  return std::stoull(digits);
}

}  // namespace

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, std::size_t layer) {
  return dir / ("layer-" + std::to_string(layer) + ".ckpt");
}

void checkpoint_save(const LayerState& state, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = checkpoint_path(dir, state.layer);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IntegrityError("cannot write " + tmp.string());
    out << kMagic << ' ' << state.format_version << '\n';
    out << state.spec.to_string() << '\n';
    out << "layer=" << state.layer << '\n';
    for (const Subgroup& h : state.classes)
      out << format_hol_list(generating_set(state.spec, h)) << '\n';
    out << "count=" << state.classes.size() << '\n';
    out.flush();
    if (!out) throw IntegrityError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

LayerState checkpoint_load_file(const GroupSpec& spec, const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) corrupt(file, "cannot open");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (lines.size() < 4) corrupt(file, "truncated");

  LayerState state;
  std::istringstream header(lines[0]);
  std::string magic;
  if (!(header >> magic >> state.format_version) || magic != kMagic)
    corrupt(file, "not a checkpoint");
  if (state.format_version != kCheckpointFormatVersion)
    corrupt(file, "unsupported format version " + std::to_string(state.format_version));
  try {
    state.spec = GroupSpec::parse(lines[1]);
  } catch (const Error& e) {
    corrupt(file, e.what());
  }
  if (!(state.spec == spec))
    corrupt(file, "written for group " + lines[1] + ", expected " + spec.to_string());
  state.layer = parse_count(file, lines[2], "layer");
  const std::size_t count = parse_count(file, lines.back(), "count");
  if (count != lines.size() - 4) corrupt(file, "count footer does not match the records");
  for (std::size_t i = 3; i + 1 < lines.size(); ++i) {
    try {
      state.classes.push_back(closure(spec, parse_hol_list(spec, lines[i])));
    } catch (const Error& e) {
      corrupt(file, "record " + std::to_string(i - 2) + ": " + e.what());
    }
  }
  return state;
}

std::optional<LayerState> checkpoint_load(const GroupSpec& spec, const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("layer-", 0) != 0 || name.size() <= 11 ||
        name.substr(name.size() - 5) != ".ckpt")
      continue;
    const std::string digits = name.substr(6, name.size() - 11);
    if (digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const std::size_t k = std::stoull(digits);
    if (!best || k > *best) best = k;
  }
  if (!best) return std::nullopt;
  LayerState state = checkpoint_load_file(spec, checkpoint_path(dir, *best));
  if (state.layer != *best)
    corrupt(checkpoint_path(dir, *best), "layer line says " + std::to_string(state.layer));
  return state;
}

}  // namespace braceforge
