#include "braceforge/classify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "braceforge/dedup.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/regularity.hpp"

namespace braceforge {

namespace {

using Index = std::uint32_t;

GroupTable kernel_table(const GroupSpec& spec, const Subgroup& h) {
  const Automorphism id = identity_automorphism(spec);
  std::vector<HolElement> kernel;
  for (const HolElement& x : h.elements())
    if (x.alpha == id) kernel.push_back(x);
  return table_of(spec, Subgroup::from_sorted(std::move(kernel)));
}

// H modulo its translations, on the cosets x K.
GroupTable quotient_table(const GroupSpec& spec, const Subgroup& h) {
  const auto elements = h.elements();
  const Automorphism id = identity_automorphism(spec);
  const auto index_of = [&](const HolElement& x) {
    return static_cast<Index>(std::lower_bound(elements.begin(), elements.end(), x) -
                              elements.begin());
  };
  std::vector<HolElement> kernel;
  for (const HolElement& x : elements)
    if (x.alpha == id) kernel.push_back(x);
  const Index none = static_cast<Index>(elements.size());
  std::vector<Index> coset(elements.size(), none);
  std::vector<Index> reps;
  for (Index i = 0; i < elements.size(); ++i) {
    if (coset[i] != none) continue;
    for (const HolElement& k : kernel) coset[index_of(hol_mul(spec, elements[i], k))] =
        static_cast<Index>(reps.size());
    reps.push_back(i);
  }
  GroupTable t;
  t.mul.assign(reps.size(), std::vector<Index>(reps.size()));
  for (Index a = 0; a < reps.size(); ++a)
    for (Index b = 0; b < reps.size(); ++b)
      t.mul[a][b] = coset[index_of(hol_mul(spec, elements[reps[a]], elements[reps[b]]))];
  t.identity = coset[index_of(hol_identity(spec))];
  return t;
}

BraceInvariants invariants_without_length(const GroupSpec& spec, const Subgroup& h) {
  if (!is_regular(spec, h)) throw ContractError("brace invariants of a non-regular subgroup");
  return {group_fingerprint(table_of(spec, h)), group_fingerprint(kernel_table(spec, h)),
          group_fingerprint(quotient_table(spec, h)), 0};
}

// Runs work(i) for i in [0, count) on up to `jobs` threads.
template <typename Work>
void parallel_for(std::size_t count, std::size_t jobs, Work work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < count;) {
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t class_length(const GroupSpec& spec, const Subgroup& h) {
  return conjugation_orbit(spec, h, aut_conjugators(spec)).size();
}

BraceInvariants brace_invariants(const GroupSpec& spec, const Subgroup& h) {
  BraceInvariants inv = invariants_without_length(spec, h);
  inv.class_length = class_length(spec, h);
  return inv;
}

std::optional<Automorphism> find_aut_conjugator(const GroupSpec& spec, const Subgroup& h1,
                                                const Subgroup& h2) {
  if (h1.order() != h2.order()) return std::nullopt;
  const std::vector<Automorphism> gens = aut_generators(spec);
  std::vector<HolElement> conj, conj_inv;
  for (const Automorphism& a : gens) {
    conj.push_back(pure_automorphism(spec, a));
    conj_inv.push_back(pure_automorphism(spec, invert(spec, a)));
  }
  std::unordered_map<Subgroup, Automorphism, SubgroupHash> reached{
      {h1, identity_automorphism(spec)}};
  std::vector<Subgroup> queue{h1};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Automorphism via = reached.at(queue[i]);
    if (queue[i] == h2) return via;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      Subgroup k = conjugate_subgroup(spec, conj[c], conj_inv[c], queue[i]);
      if (reached.count(k)) continue;
      reached.emplace(k, compose(spec, gens[c], via));
      queue.push_back(std::move(k));
    }
  }
  return std::nullopt;
}

bool braces_isomorphic(const GroupSpec& spec, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  if (group_fingerprint(table_of(spec, h1)) != group_fingerprint(table_of(spec, h2)))
    return false;
  return find_aut_conjugator(spec, h1, h2).has_value();
}

std::vector<BraceClass> classify_braces(const GroupSpec& spec, std::span<const Subgroup> list,
                                        const ClassifyOptions& options) {
  std::vector<BraceInvariants> keys(list.size());
  parallel_for(list.size(), options.jobs,
               [&](std::size_t i) { keys[i] = invariants_without_length(spec, list[i]); });

  std::map<BraceInvariants, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < list.size(); ++i) buckets[keys[i]].push_back(i);
  std::vector<const std::pair<const BraceInvariants, std::vector<std::size_t>>*> work;
  for (const auto& entry : buckets) work.push_back(&entry);

  const std::vector<HolElement> conjugators = aut_conjugators(spec);
  std::vector<std::vector<BraceClass>> slots(work.size());
  parallel_for(work.size(), options.jobs, [&](std::size_t w) {
    const auto& [key, members] = *work[w];
    // Large buckets are split by class length first.
    std::map<std::uint64_t, std::vector<Subgroup>> parts;
    for (std::size_t i : members) {
      const std::uint64_t length = members.size() > options.class_length_threshold
                                       ? conjugation_orbit(spec, list[i], conjugators).size()
                                       : 0;
      parts[length].push_back(list[i]);
    }
    for (const auto& [length, part] : parts)
      for (OrbitRepresentative& r : orbit_representatives(spec, part, conjugators)) {
        BraceInvariants inv = key;
        inv.class_length = r.orbit_size;
        slots[w].push_back({std::move(r.representative), std::move(inv)});
      }
  });

  std::vector<BraceClass> out;
  for (auto& slot : slots)
    for (BraceClass& c : slot) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const BraceClass& a, const BraceClass& b) {
    if (a.invariants != b.invariants) return a.invariants < b.invariants;
    return a.representative < b.representative;
  });
  return out;
}

std::vector<BraceClass> merge_classified(const GroupSpec& spec, std::span<const BraceClass> a,
                                         std::span<const BraceClass> b,
                                         const ClassifyOptions& options) {
  std::vector<Subgroup> reps;
  for (const BraceClass& c : a) reps.push_back(c.representative);
  for (const BraceClass& c : b) reps.push_back(c.representative);
  return classify_braces(spec, reps, options);
}

}  // namespace braceforge
