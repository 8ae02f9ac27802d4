// braceforge: enumerate, classify and check left braces on a finite abelian group.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "braceforge/brace.hpp"
#include "braceforge/classify.hpp"
#include "braceforge/dedup.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/pipeline.hpp"
#include "braceforge/regularity.hpp"

namespace bf = braceforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitCapacity = 4;

struct Config {
  std::string group;
  std::int64_t prime = 0;
  std::string checkpoint_dir;
  bool resume = false;
  std::size_t jobs = 1;
  std::string in;
  std::string out;
  std::string id_map;
  std::string format = "tsv";
  std::uint64_t seed = 0;
  long halt_at_layer = -1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bf::IntegrityError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw bf::IntegrityError(path + ": write failed");
}

bf::ClassList load_class_list(const std::string& path) {
  try {
    return bf::parse_class_list(read_file(path));
  } catch (const bf::ParseError& e) {
    throw bf::IntegrityError(path + ": " + e.what());
  }
}

std::int64_t prime_for(const Config& c, const bf::GroupSpec& spec) {
  auto p = spec.p_group_prime();
  if (!p) throw bf::DomainError("group " + spec.to_string() + " is not a p-group");
  if (c.prime != 0 && c.prime != *p)
    throw bf::DomainError("group " + spec.to_string() + " is not a " + std::to_string(c.prime) +
                          "-group");
  return *p;
}

bf::PipelineOptions pipeline_options(const Config& c) {
  bf::PipelineOptions options;
  options.classify.jobs = c.jobs;
  if (!c.checkpoint_dir.empty()) options.layered.checkpoint_dir = c.checkpoint_dir;
  options.layered.resume = c.resume;
  if (c.halt_at_layer >= 0) {
    const auto halt = static_cast<std::size_t>(c.halt_at_layer);
    // Stops the process half way through the layer, as a crash would.
    options.layered.progress = [halt](std::size_t layer, std::size_t done, std::size_t total) {
      if (layer == halt && 2 * done >= total) {
        std::cerr << "halting in layer " << layer << " after " << done << " of " << total << "\n";
        std::_Exit(kExitFailure);
      }
    };
  }
  return options;
}

int cmd_enumerate(const Config& c) {
  const bf::GroupSpec spec = bf::GroupSpec::parse(c.group);
  const std::int64_t p = prime_for(c, spec);
  const bf::PipelineResult r = bf::run_pipeline(spec, p, pipeline_options(c));
  write_output(c.out, bf::format_class_list(spec, r.classes));
  std::cerr << "group=" << spec.to_string() << " sylow_order=" << r.sylow_order
            << " regular_classes_in_sylow=" << r.layered.classes.size()
            << " classes=" << r.classes.size() << " buckets=" << r.bucket_count << "\n";
  return kExitOk;
}

int cmd_classify(const Config& c) {
  // One generating set per line, as written in checkpoints.
  const bf::GroupSpec spec = bf::GroupSpec::parse(c.group);
  std::istringstream in(read_file(c.in));
  std::vector<bf::Subgroup> list;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      list.push_back(bf::closure(spec, bf::parse_hol_list(spec, line)));
    } catch (const bf::ParseError& e) {
      throw bf::IntegrityError(c.in + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!bf::is_regular(spec, list.back())) {
      std::cerr << c.in << ":" << line_no << ": subgroup is not regular\n";
      return kExitMismatch;
    }
  }
  const auto classes = bf::classify_braces(spec, list, {c.jobs, bf::kClassLengthThreshold});
  write_output(c.out, bf::format_class_list(spec, classes));
  std::cerr << "classes=" << classes.size() << " buckets=" << bf::count_buckets(classes) << "\n";
  return kExitOk;
}

// Random element of Aut(G) as a product of standard generators.
bf::Automorphism random_automorphism(const bf::GroupSpec& spec, std::mt19937_64& rng) {
  const std::vector<bf::Automorphism> gens = bf::aut_generators(spec);
  bf::Automorphism a = bf::identity_automorphism(spec);
  if (gens.empty()) return a;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < 32; ++i) a = bf::compose(spec, gens[pick(rng)], a);
  return a;
}

int cmd_verify(const Config& c) {
  const bf::ClassList list = load_class_list(c.in);
  const bf::GroupSpec& spec = list.spec;
  std::mt19937_64 rng(c.seed);
  int failures = 0;
  const auto fail = [&](std::size_t i, const std::string& what) {
    std::cout << "record " << i + 1 << ": " << what << "\n";
    ++failures;
  };
  for (std::size_t i = 0; i < list.records.size(); ++i) {
    const bf::ClassRecord& r = list.records[i];
    if (!bf::is_regular(spec, r.subgroup)) {
      fail(i, "not regular");
      continue;
    }
    const bf::BraceInvariants inv = bf::brace_invariants(spec, r.subgroup);
    if (inv.mult_fp.id() != r.mult_id || inv.kernel_fp.id() != r.kernel_id ||
        inv.quotient_fp.id() != r.quotient_id)
      fail(i, "invariant tuple differs from the recomputed one");
    if (inv.class_length != r.class_length) fail(i, "class length differs");
    const bf::RegularSubgroup lambda = bf::lambda_table(spec, r.subgroup);
    if (!bf::verify_lambda_cocycle(lambda)) fail(i, "lambda table fails the cocycle identities");
    if (!bf::verify_brace(bf::brace_from_regular(lambda))) fail(i, "brace law fails");
    const bf::HolElement x = bf::pure_automorphism(spec, random_automorphism(spec, rng));
    const bf::Subgroup conj = bf::conjugate_subgroup(spec, x, r.subgroup);
    if (bf::brace_invariants(spec, conj) != inv) fail(i, "invariants change under conjugation");
  }
  for (std::size_t i = 0; i < list.records.size(); ++i)
    for (std::size_t j = i + 1; j < list.records.size(); ++j)
      if (bf::braces_isomorphic(spec, list.records[i].subgroup, list.records[j].subgroup))
        fail(j, "isomorphic to record " + std::to_string(i + 1));
  std::cout << (failures ? "FAIL" : "PASS") << " " << list.records.size() << " classes, "
            << failures << " problems\n";
  return failures ? kExitMismatch : kExitOk;
}

int cmd_oracle(const Config& c) {
  const bf::GroupSpec spec = bf::GroupSpec::parse(c.group);
  const std::int64_t p = prime_for(c, spec);
  const bf::OracleComparison cmp = bf::compare_with_oracle(spec, p, pipeline_options(c));
  std::cout << "pipeline classes=" << cmp.pipeline.size() << " oracle classes=" << cmp.oracle.size()
            << " oracle subgroups=" << cmp.oracle_subgroups << "\n";
  for (const bf::Subgroup& h : cmp.missing)
    std::cout << "missing\t" << bf::format_hol_list(bf::generating_set(spec, h)) << "\n";
  for (const bf::Subgroup& h : cmp.extra)
    std::cout << "extra\t" << bf::format_hol_list(bf::generating_set(spec, h)) << "\n";
  std::cout << (cmp.equal() ? "PASS" : "FAIL") << "\n";
  return cmp.equal() ? kExitOk : kExitMismatch;
}

int cmd_report(const Config& c) {
  if (c.format != "tsv") throw bf::DomainError("unsupported format '" + c.format + "'");
  const bf::ClassList list = load_class_list(c.in);
  std::map<std::string, std::string> names;
  if (!c.id_map.empty()) {
    try {
      names = bf::parse_id_map(read_file(c.id_map));
    } catch (const bf::ParseError& e) {
      throw bf::IntegrityError(c.id_map + ": " + e.what());
    }
  }
  write_output(c.out, bf::format_report(list, names));
  return kExitOk;
}

int cmd_braces(const Config& c) {
  const bf::ClassList list = load_class_list(c.in);
  std::string text;
  for (const bf::ClassRecord& r : list.records) {
    if (!text.empty()) text += "\n";
    text += bf::format_brace_file(bf::lambda_table(list.spec, r.subgroup));
  }
  write_output(c.out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left braces on finite abelian groups via regular subgroups of the holomorph"};
  app.require_subcommand(1);
  Config c;

  const auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "cyclic factors, e.g. 4,4")->required();
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "classification workers")->check(CLI::PositiveNumber);
  };
  const auto add_run = [&](CLI::App* sub) {
    add_group(sub);
    sub->add_option("--prime", c.prime, "the prime of the group order");
    add_jobs(sub);
    sub->add_option("--checkpoint-dir", c.checkpoint_dir, "write a checkpoint after each layer");
    sub->add_flag("--resume", c.resume, "continue from the newest checkpoint");
    sub->add_option("--halt-at-layer", c.halt_at_layer)->group("");
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "seed for randomised checks");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate and classify all braces");
  add_run(enumerate);
  enumerate->add_option("--out", c.out, "class-list file (default stdout)");

  CLI::App* classify = app.add_subcommand("classify", "classify a list of regular subgroups");
  add_group(classify);
  add_jobs(classify);
  classify->add_option("--in", c.in, "one generating set per line")->required();
  classify->add_option("--out", c.out, "class-list file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "re-check a class-list file");
  verify->add_option("--in", c.in, "class-list file")->required();
  add_seed(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "compare the pipeline with brute force");
  add_run(oracle);

  CLI::App* report = app.add_subcommand("report", "brace counts by multiplicative group");
  report->add_option("--in", c.in, "class-list file")->required();
  report->add_option("--out", c.out, "output file (default stdout)");
  report->add_option("--format", c.format, "output format")->check(CLI::IsMember({"tsv"}));
  report->add_option("--id-map", c.id_map, "TSV of fingerprint id to group name");

  CLI::App* braces = app.add_subcommand("braces", "write the lambda tables of a class list");
  braces->add_option("--in", c.in, "class-list file")->required();
  braces->add_option("--out", c.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(c);
    if (*classify) return cmd_classify(c);
    if (*verify) return cmd_verify(c);
    if (*oracle) return cmd_oracle(c);
    if (*report) return cmd_report(c);
    if (*braces) return cmd_braces(c);
  } catch (const bf::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const bf::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const bf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
