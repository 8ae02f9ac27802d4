#include "braceforge/holomorph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

using ElementSet = std::unordered_set<HolElement, HolElementHash>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<HolElement> sorted(const ElementSet& set) {
  std::vector<HolElement> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t HolElementHash::operator()(const HolElement& x) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < x.g.rank; ++i) {
    h ^= static_cast<std::uint32_t>(x.g[i]);
    h *= 1099511628211ull;
  }
  const std::size_t n = std::size_t{x.alpha.rank} * x.alpha.rank;
  for (std::size_t k = 0; k < n; ++k) {
    h ^= static_cast<std::uint32_t>(x.alpha.entries[k]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

HolElement hol_identity(const GroupSpec& spec) {
  return HolElement{zero_element(spec), identity_automorphism(spec)};
}

HolElement translation(const GroupSpec& spec, const GroupElement& g) {
  return HolElement{g, identity_automorphism(spec)};
}

HolElement pure_automorphism(const GroupSpec& spec, const Automorphism& alpha) {
  return HolElement{zero_element(spec), alpha};
}

HolElement hol_mul(const GroupSpec& spec, const HolElement& x, const HolElement& y) {
  return HolElement{add(spec, x.g, apply(spec, x.alpha, y.g)), compose(spec, x.alpha, y.alpha)};
}

HolElement hol_inv(const GroupSpec& spec, const HolElement& x) {
  const Automorphism inv = invert(spec, x.alpha);
  return HolElement{negate(spec, apply(spec, inv, x.g)), inv};
}

HolElement hol_conj(const GroupSpec& spec, const HolElement& x, const HolElement& x_inv,
                    const HolElement& y) {
  return hol_mul(spec, hol_mul(spec, x, y), x_inv);
}

GroupElement hol_act(const GroupSpec& spec, const HolElement& x, const GroupElement& h) {
  return add(spec, x.g, apply(spec, x.alpha, h));
}

HolElement hol_pow(const GroupSpec& spec, const HolElement& x, std::int64_t k) {
  HolElement base = k < 0 ? hol_inv(spec, x) : x;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  HolElement result = hol_identity(spec);
  while (e > 0) {
    if (e & 1) result = hol_mul(spec, result, base);
    base = hol_mul(spec, base, base);
    e >>= 1;
  }
  return result;
}

std::string format_hol(const HolElement& x) {
  return format_element(x.g) + " | " + format_matrix(x.alpha);
}

HolElement parse_hol(const GroupSpec& spec, std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("holomorph element '" + std::string(text) + "' lacks a '|'");
  return HolElement{parse_element(spec, trim(text.substr(0, bar))),
                    parse_automorphism(spec, trim(text.substr(bar + 1)))};
}

std::string format_hol_list(std::span<const HolElement> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += format_hol(xs[i]);
  }
  return out;
}

std::vector<HolElement> parse_hol_list(const GroupSpec& spec, std::string_view text) {
  std::vector<HolElement> out;
  text = trim(text);
  if (text.empty()) return out;
  // Matrices also use ';' between rows, so an element starts at each token
  // containing '|' and runs up to the next such token.
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    tokens.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                      : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  std::string current;
  for (std::string_view token : tokens) {
    if (token.find('|') != std::string_view::npos) {
      if (!current.empty()) out.push_back(parse_hol(spec, current));
      current = std::string(token);
    } else {
      if (current.empty()) throw ParseError("element list does not start with an element");
      current += ';';
      current += token;
    }
  }
  if (!current.empty()) out.push_back(parse_hol(spec, current));
  return out;
}

Subgroup Subgroup::from_sorted(std::vector<HolElement> elements,
                               std::vector<HolElement> generators) {
  Subgroup h;
  h.elements_ = std::move(elements);
  h.generators_ = std::move(generators);
  return h;
}

bool Subgroup::contains(const HolElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::size_t SubgroupHash::operator()(const Subgroup& h) const noexcept {
  std::size_t seed = h.order();
  HolElementHash eh;
  for (const HolElement& x : h.elements())
    seed ^= eh(x) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
  return seed;
}

Subgroup closure(const GroupSpec& spec, std::span<const HolElement> gens, std::size_t bound) {
  const HolElement id = hol_identity(spec);
  std::vector<HolElement> useful;
  for (const HolElement& g : gens)
    if (g != id && std::find(useful.begin(), useful.end(), g) == useful.end()) useful.push_back(g);
  ElementSet seen{id};
  std::deque<HolElement> queue{id};
  while (!queue.empty()) {
    const HolElement x = queue.front();
    queue.pop_front();
    for (const HolElement& g : useful) {
      HolElement y = hol_mul(spec, x, g);
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          throw CapacityError("subgroup closure exceeds the bound of " + std::to_string(bound));
        queue.push_back(std::move(y));
      }
    }
  }
  return Subgroup::from_sorted(sorted(seen), std::move(useful));
}

Subgroup closure_with(const GroupSpec& spec, const Subgroup& base,
                      std::span<const HolElement> extra, std::size_t bound) {
  std::vector<HolElement> gens = generators_of(spec, base);
  bool grows = false;
  for (const HolElement& x : extra)
    if (!base.contains(x) && std::find(gens.begin(), gens.end(), x) == gens.end()) {
      gens.push_back(x);
      grows = true;
    }
  if (!grows) return Subgroup::from_sorted({base.elements().begin(), base.elements().end()}, gens);
  // Dimino: the result is a union of right cosets H r of the base subgroup,
  // closed under right multiplication by the generators.
  ElementSet seen(base.elements().begin(), base.elements().end());
  std::vector<HolElement> reps{hol_identity(spec)};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const HolElement& g : gens) {
      HolElement x = hol_mul(spec, reps[i], g);
      if (seen.count(x)) continue;
      for (const HolElement& h : base.elements()) seen.insert(hol_mul(spec, h, x));
      if (seen.size() > bound)
        throw CapacityError("subgroup closure exceeds the bound of " + std::to_string(bound));
      reps.push_back(std::move(x));
    }
  }
  return Subgroup::from_sorted(sorted(seen), std::move(gens));
}

std::vector<HolElement> generating_set(const GroupSpec& spec, const Subgroup& h) {
  return generators_modulo(spec, h, trivial_subgroup(spec));
}

std::vector<HolElement> generators_of(const GroupSpec& spec, const Subgroup& h) {
  if (!h.known_generators().empty() || h.order() <= 1)
    return {h.known_generators().begin(), h.known_generators().end()};
  return generating_set(spec, h);
}

std::vector<HolElement> generators_modulo(const GroupSpec& spec, const Subgroup& h,
                                          const Subgroup& n) {
  std::vector<HolElement> gens;
  Subgroup current = n;
  for (const HolElement& x : h.elements()) {
    if (current.order() == h.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    const HolElement single[] = {x};
    current = closure_with(spec, current, single);
  }
  return gens;
}

Subgroup trivial_subgroup(const GroupSpec& spec) {
  return Subgroup::from_sorted({hol_identity(spec)});
}

Subgroup translations_subgroup(const GroupSpec& spec, std::uint64_t bound) {
  std::vector<HolElement> elements;
  for (const GroupElement& g : enumerate_elements(spec, bound))
    elements.push_back(translation(spec, g));
  std::vector<HolElement> gens;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    gens.push_back(translation(spec, basis_element(spec, i)));
  // Translations differ only in g and enumerate_elements is lexicographic.
  return Subgroup::from_sorted(std::move(elements), std::move(gens));
}

std::vector<HolElement> sylow_p_hol_generators(const GroupSpec& spec, std::int64_t p) {
  auto prime = spec.p_group_prime();
  if (!prime || *prime != p)
    throw DomainError("group " + spec.to_string() + " is not a " + std::to_string(p) + "-group");
  std::vector<HolElement> gens;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    gens.push_back(translation(spec, basis_element(spec, i)));
  for (const Automorphism& m : sylow_p_aut_generators(spec, p))
    gens.push_back(pure_automorphism(spec, m));
  return gens;
}

Subgroup conjugate_subgroup(const GroupSpec& spec, const HolElement& x, const Subgroup& h) {
  return conjugate_subgroup(spec, x, hol_inv(spec, x), h);
}

Subgroup conjugate_subgroup(const GroupSpec& spec, const HolElement& x, const HolElement& x_inv,
                            const Subgroup& h) {
  std::vector<HolElement> elements;
  elements.reserve(h.order());
  for (const HolElement& y : h.elements()) elements.push_back(hol_conj(spec, x, x_inv, y));
  std::sort(elements.begin(), elements.end());
  std::vector<HolElement> gens;
  for (const HolElement& y : h.known_generators()) gens.push_back(hol_conj(spec, x, x_inv, y));
  return Subgroup::from_sorted(std::move(elements), std::move(gens));
}

bool is_normal_in(const GroupSpec& spec, const Subgroup& n, std::span<const HolElement> gens) {
  const std::vector<HolElement> ngens = generators_of(spec, n);
  for (const HolElement& x : gens) {
    const HolElement xi = hol_inv(spec, x);
    for (const HolElement& y : ngens)
      if (!n.contains(hol_conj(spec, x, xi, y))) return false;
  }
  return true;
}

}  // namespace braceforge
