#include "braceforge/series.hpp"

#include <algorithm>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

HolElement commutator(const GroupSpec& spec, const HolElement& x, const HolElement& y) {
  return hol_mul(spec, hol_mul(spec, hol_inv(spec, x), hol_inv(spec, y)), hol_mul(spec, x, y));
}

std::int64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return static_cast<std::int64_t>(d);
  return static_cast<std::int64_t>(n);
}

// Descends from `top` to `bottom` through power subgroups when top/bottom is
// abelian, appending the new terms and their primes.
void refine_abelian_section(const GroupSpec& spec, const Subgroup& top, const Subgroup& bottom,
                            std::vector<Subgroup>& terms, std::vector<std::int64_t>& primes) {
  Subgroup current = top;
  while (current.order() != bottom.order()) {
    const std::int64_t q = smallest_prime_factor(current.order() / bottom.order());
    std::vector<HolElement> powers;
    for (const HolElement& y : generators_of(spec, current)) powers.push_back(hol_pow(spec, y, q));
    Subgroup next = closure_with(spec, bottom, powers);
    primes.push_back(q);
    terms.push_back(next);
    current = std::move(next);
  }
}

}  // namespace

Subgroup normal_closure(const GroupSpec& spec, std::span<const HolElement> gens,
                        std::span<const HolElement> ambient) {
  Subgroup h = closure(spec, gens);
  std::vector<HolElement> inverses;
  for (const HolElement& s : ambient) inverses.push_back(hol_inv(spec, s));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
      for (const HolElement& y : generators_of(spec, h)) {
        HolElement c = hol_conj(spec, ambient[i], inverses[i], y);
        if (h.contains(c)) continue;
        const HolElement single[] = {c};
        h = closure_with(spec, h, single);
        changed = true;
      }
    }
  }
  return h;
}

Subgroup commutator_subgroup(const GroupSpec& spec, std::span<const HolElement> xs,
                             std::span<const HolElement> ys, std::span<const HolElement> ambient) {
  std::vector<HolElement> comms;
  for (const HolElement& x : xs)
    for (const HolElement& y : ys) comms.push_back(commutator(spec, x, y));
  return normal_closure(spec, comms, ambient);
}

NormalSeries elementary_abelian_series(const GroupSpec& spec, const Subgroup& s) {
  NormalSeries series;
  series.terms.push_back(s);
  if (s.order() <= 1) return series;
  const std::vector<HolElement> s_gens = generators_of(spec, s);
  if (auto p = prime_of_power(s.order())) {
    Subgroup n = s;
    while (n.order() > 1) {
      std::vector<HolElement> gens;
      const std::vector<HolElement> n_gens = generators_of(spec, n);
      for (const HolElement& x : n_gens) {
        for (const HolElement& y : s_gens) gens.push_back(commutator(spec, x, y));
        gens.push_back(hol_pow(spec, x, *p));
      }
      Subgroup next = normal_closure(spec, gens, s_gens);
      if (next.order() == n.order())
        throw ContractError("lower p-central series failed to descend");
      series.primes.push_back(*p);
      series.terms.push_back(next);
      n = std::move(next);
    }
    return series;
  }
  Subgroup x = s;
  while (x.order() > 1) {
    const std::vector<HolElement> x_gens = generators_of(spec, x);
    Subgroup derived = commutator_subgroup(spec, x_gens, x_gens, x_gens);
    if (derived.order() == x.order())
      throw DomainError("group of order " + std::to_string(s.order()) + " is not soluble");
    refine_abelian_section(spec, x, derived, series.terms, series.primes);
    x = std::move(derived);
  }
  return series;
}

bool is_elementary_abelian_section(const GroupSpec& spec, const Subgroup& upper,
                                   const Subgroup& lower, std::int64_t p) {
  if (!lower.is_subset_of(upper)) return false;
  const std::vector<HolElement> gens = generators_of(spec, upper);
  if (!is_normal_in(spec, lower, gens)) return false;
  for (const HolElement& x : gens) {
    if (!lower.contains(hol_pow(spec, x, p))) return false;
    for (const HolElement& y : gens)
      if (!lower.contains(commutator(spec, x, y))) return false;
  }
  return true;
}

bool is_elementary_abelian_series(const GroupSpec& spec, const Subgroup& s,
                                  const NormalSeries& series) {
  if (series.terms.empty() || series.terms.front() != s) return false;
  if (series.terms.back().order() != 1) return false;
  if (series.primes.size() + 1 != series.terms.size()) return false;
  const std::vector<HolElement> s_gens = generators_of(spec, s);
  for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
    if (!is_normal_in(spec, series.terms[i + 1], s_gens)) return false;
    if (!is_elementary_abelian_section(spec, series.terms[i], series.terms[i + 1],
                                       series.primes[i]))
      return false;
  }
  return true;
}

std::vector<Subgroup> relative_elementary_series(const GroupSpec& spec, const Subgroup& a,
                                                 const Subgroup& n) {
  std::vector<Subgroup> terms{a};
  std::vector<std::int64_t> primes;
  const std::vector<HolElement> n_gens = generators_of(spec, n);
  Subgroup x = a;
  while (x.order() != n.order()) {
    const std::vector<HolElement> x_gens = generators_of(spec, x);
    Subgroup derived =
        closure_with(spec, commutator_subgroup(spec, x_gens, x_gens, x_gens), n_gens);
    if (derived.order() == x.order())
      throw DomainError("section of order " + std::to_string(x.order() / n.order()) +
                        " is not soluble");
    refine_abelian_section(spec, x, derived, terms, primes);
    x = std::move(derived);
  }
  return terms;
}

SectionSpace::SectionSpace(const GroupSpec& spec, const Subgroup& n, const Subgroup& m,
                           std::int64_t p)
    : p_(p), basis_(generators_modulo(spec, n, m)) {
  const std::size_t d = basis_.size();
  std::vector<std::int64_t> digits(d, 0);
  while (true) {
    const HolElement base = lift(spec, digits);
    for (const HolElement& y : m.elements()) {
      if (!coords_.emplace(hol_mul(spec, base, y), digits).second)
        throw ContractError("section is not elementary abelian of exponent " + std::to_string(p));
    }
    if (!gfp::advance(digits, p)) break;
  }
  if (coords_.size() != n.order())
    throw ContractError("section is not elementary abelian of exponent " + std::to_string(p));
}

const gfp::Vector& SectionSpace::coordinates(const HolElement& x) const {
  auto it = coords_.find(x);
  if (it == coords_.end()) throw ContractError("element lies outside the section");
  return it->second;
}

HolElement SectionSpace::lift(const GroupSpec& spec, const gfp::Vector& v) const {
  HolElement x = hol_identity(spec);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v[i] != 0) x = hol_mul(spec, x, hol_pow(spec, basis_[i], v[i]));
  return x;
}

}  // namespace braceforge
