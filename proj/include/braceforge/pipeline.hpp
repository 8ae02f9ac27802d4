// End to end: Sylow subgroup of Hol(G), layered enumeration of its regular
// subgroups, classification into brace classes, and the oracle comparison.

#ifndef BRACEFORGE_PIPELINE_HPP_
#define BRACEFORGE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braceforge/classify.hpp"
#include "braceforge/layered.hpp"

namespace braceforge {

struct PipelineOptions {
  LayeredOptions layered;
  ClassifyOptions classify;
};

struct PipelineResult {
  std::uint64_t sylow_order = 0;
  LayeredResult layered;
  std::vector<BraceClass> classes;
  std::size_t bucket_count = 0;
};

// The Sylow p-subgroup of Hol(G) generated by sylow_p_hol_generators.
Subgroup sylow_subgroup(const GroupSpec& spec, std::int64_t p);

PipelineResult run_pipeline(const GroupSpec& spec, std::int64_t p,
                            const PipelineOptions& options = {});

std::size_t count_buckets(std::span<const BraceClass> classes);

struct OracleComparison {
  std::vector<BraceClass> pipeline;
  std::vector<BraceClass> oracle;
  std::size_t oracle_subgroups = 0;       // distinct regular subgroups found
  std::vector<Subgroup> missing;          // oracle classes the pipeline lacks
  std::vector<Subgroup> extra;            // pipeline classes the oracle lacks
  bool equal() const { return missing.empty() && extra.empty(); }
};

OracleComparison compare_with_oracle(const GroupSpec& spec, std::int64_t p,
                                     const PipelineOptions& options = {});

}  // namespace braceforge

#endif  // BRACEFORGE_PIPELINE_HPP_
