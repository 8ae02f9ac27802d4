#include "braceforge/pipeline.hpp"

#include <algorithm>
#include <set>

#include "braceforge/oracle.hpp"

namespace braceforge {

namespace {

std::vector<Subgroup> representatives(std::span<const BraceClass> classes) {
  std::vector<Subgroup> out;
  for (const BraceClass& c : classes) out.push_back(c.representative);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup sylow_subgroup(const GroupSpec& spec, std::int64_t p) {
  return closure(spec, sylow_p_hol_generators(spec, p));
}

std::size_t count_buckets(std::span<const BraceClass> classes) {
  std::set<std::tuple<Fingerprint, Fingerprint, Fingerprint>> keys;
  for (const BraceClass& c : classes)
    keys.emplace(c.invariants.mult_fp, c.invariants.kernel_fp, c.invariants.quotient_fp);
  return keys.size();
}

PipelineResult run_pipeline(const GroupSpec& spec, std::int64_t p,
                            const PipelineOptions& options) {
  PipelineResult result;
  const Subgroup s = sylow_subgroup(spec, p);
  result.sylow_order = s.order();
  result.layered = enumerate_layered(spec, s, spec.order(), options.layered);
  result.classes = classify_braces(spec, result.layered.classes, options.classify);
  result.bucket_count = count_buckets(result.classes);
  return result;
}

OracleComparison compare_with_oracle(const GroupSpec& spec, std::int64_t p,
                                     const PipelineOptions& options) {
  OracleComparison cmp;
  const std::vector<Subgroup> found = brute_force_regular_oracle(spec, p);
  cmp.pipeline = run_pipeline(spec, p, options).classes;
  cmp.oracle_subgroups = found.size();
  cmp.oracle = classify_braces(spec, found, options.classify);
  const std::vector<Subgroup> a = representatives(cmp.pipeline);
  const std::vector<Subgroup> b = representatives(cmp.oracle);
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(cmp.missing));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cmp.extra));
  return cmp;
}

}  // namespace braceforge
