// Brace isomorphism classes: Aut(G)-conjugacy of regular subgroups, sorted
// into buckets by invariants of the multiplicative group, its lambda kernel
// and the quotient by that kernel.

#ifndef BRACEFORGE_CLASSIFY_HPP_
#define BRACEFORGE_CLASSIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braceforge/group_table.hpp"
#include "braceforge/holomorph.hpp"

namespace braceforge {

inline constexpr std::size_t kClassLengthThreshold = 1000;

struct BraceInvariants {
  Fingerprint mult_fp;
  Fingerprint kernel_fp;
  Fingerprint quotient_fp;
  std::uint64_t class_length = 0;

  auto operator<=>(const BraceInvariants&) const = default;
};

// Size of the orbit of H under conjugation by Aut(G).
std::uint64_t class_length(const GroupSpec& spec, const Subgroup& h);

// ContractError unless h is regular.
BraceInvariants brace_invariants(const GroupSpec& spec, const Subgroup& h);

// Some a in Aut(G) with (0,a) H1 (0,a)^-1 = H2.
std::optional<Automorphism> find_aut_conjugator(const GroupSpec& spec, const Subgroup& h1,
                                                const Subgroup& h2);
bool braces_isomorphic(const GroupSpec& spec, const Subgroup& h1, const Subgroup& h2);

struct BraceClass {
  Subgroup representative;  // least member of its Aut(G)-orbit
  BraceInvariants invariants;
};

struct ClassifyOptions {
  std::size_t jobs = 1;
  // Buckets larger than this are split further by class length.
  std::size_t class_length_threshold = kClassLengthThreshold;
};

// One class per Aut(G)-orbit met by `list` (all regular), sorted by
// invariants then representative. Independent of `jobs`.
std::vector<BraceClass> classify_braces(const GroupSpec& spec, std::span<const Subgroup> list,
                                        const ClassifyOptions& options = {});

// Classes of the union of two classified lists.
std::vector<BraceClass> merge_classified(const GroupSpec& spec, std::span<const BraceClass> a,
                                         std::span<const BraceClass> b,
                                         const ClassifyOptions& options = {});

// Class-list files:
//   BRACEFORGE-CLASSES 1
//   <group>
//   <mult id>;<kernel id>;<quotient id> TAB <class length> TAB <generators>
//   count=<n>
struct ClassRecord {
  std::string mult_id;
  std::string kernel_id;
  std::string quotient_id;
  std::uint64_t class_length = 0;
  Subgroup subgroup;
};

struct ClassList {
  GroupSpec spec;
  std::vector<ClassRecord> records;
};

std::string format_class_list(const GroupSpec& spec, std::span<const BraceClass> classes);
// IntegrityError (ParseError) on malformed input.
ClassList parse_class_list(std::string_view text);

// Rows "<mult id> TAB <count>" sorted by id (or by mapped name), then
// "# total=<n>". `names` maps fingerprint ids to display names.
std::string format_report(const ClassList& list,
                          const std::map<std::string, std::string>& names = {});
// "<id> TAB <name>" lines; '#' starts a comment.
std::map<std::string, std::string> parse_id_map(std::string_view text);

}  // namespace braceforge

#endif  // BRACEFORGE_CLASSIFY_HPP_
