// Test-side reference computations. Nothing here calls the enumeration
// engine; subgroups are found by brute force over element sets.

#ifndef BRACEFORGE_TESTS_SUPPORT_HPP_
#define BRACEFORGE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "braceforge/abelian.hpp"
#include "braceforge/automorphism.hpp"
#include "braceforge/holomorph.hpp"

namespace testing_support {

namespace bf = braceforge;

inline std::uint64_t seed() {
  const char* s = std::getenv("BRACEFORGE_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

inline bf::GroupSpec spec(std::initializer_list<std::int64_t> f) {
  return bf::GroupSpec(std::vector<std::int64_t>(f));
}

inline bf::HolElement hol(const bf::GroupSpec& s, std::initializer_list<std::int64_t> g,
                          const bf::IntMatrix& m) {
  std::vector<std::int64_t> coords(g);
  return {bf::make_element(s, coords), bf::make_automorphism(s, m)};
}

// x * h computed straight from the matrix entries.
inline std::vector<std::int64_t> act_raw(const bf::GroupSpec& s, const bf::HolElement& x,
                                         const std::vector<std::int64_t>& h) {
  std::vector<std::int64_t> out(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    std::int64_t v = x.g[i];
    for (std::size_t j = 0; j < s.rank(); ++j) v += std::int64_t{x.alpha.at(i, j)} * h[j];
    out[i] = ((v % s.factor(i)) + s.factor(i)) % s.factor(i);
  }
  return out;
}

// The permutation of G induced by x, on mixed-radix indices.
inline std::vector<std::uint64_t> permutation(const bf::GroupSpec& s, const bf::HolElement& x) {
  std::vector<std::uint64_t> perm;
  for (const bf::GroupElement& h : bf::enumerate_elements(s)) {
    std::vector<std::int64_t> c(h.coords.begin(), h.coords.begin() + h.rank);
    perm.push_back(bf::element_index(s, bf::make_element(s, act_raw(s, x, c))));
  }
  return perm;
}

// Every automorphism, by testing all well-defined matrices for injectivity
// on the element list.
inline std::vector<bf::Automorphism> all_automorphisms(const bf::GroupSpec& s) {
  const std::size_t n = s.rank();
  std::vector<std::int64_t> entries(n * n, 0);
  const std::vector<bf::GroupElement> elements = bf::enumerate_elements(s);
  std::vector<bf::Automorphism> out;
  while (true) {
    bf::IntMatrix m(n, std::vector<std::int64_t>(n));
    bool defined = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = entries[i * n + j];
        const std::int64_t step = s.factor(i) / std::gcd(s.factor(i), s.factor(j));
        if (m[i][j] % step != 0) defined = false;
      }
    if (defined) {
      std::set<std::vector<std::int64_t>> images;
      for (const bf::GroupElement& h : elements) {
        std::vector<std::int64_t> img(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t v = 0;
          for (std::size_t j = 0; j < n; ++j) v += m[i][j] * h[j];
          img[i] = v % s.factor(i);
        }
        images.insert(img);
      }
      if (images.size() == elements.size()) out.push_back(bf::make_matrix_unchecked(s, m));
    }
    std::size_t k = 0;
    for (; k < entries.size(); ++k) {
      if (++entries[k] < s.factor(k / n)) break;
      entries[k] = 0;
    }
    if (k == entries.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The whole holomorph, element by element.
inline std::vector<bf::HolElement> all_hol_elements(const bf::GroupSpec& s) {
  std::vector<bf::HolElement> out;
  for (const bf::GroupElement& g : bf::enumerate_elements(s))
    for (const bf::Automorphism& a : all_automorphisms(s)) out.push_back({g, a});
  std::sort(out.begin(), out.end());
  return out;
}

// Closure by repeated products of a sorted set.
inline std::vector<bf::HolElement> naive_closure(const bf::GroupSpec& s,
                                                 std::vector<bf::HolElement> gens) {
  std::set<bf::HolElement> set(gens.begin(), gens.end());
  set.insert(bf::hol_identity(s));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<bf::HolElement> current(set.begin(), set.end());
    for (const bf::HolElement& x : current)
      for (const bf::HolElement& y : current)
        if (set.insert(bf::hol_mul(s, x, y)).second) grew = true;
  }
  return {set.begin(), set.end()};
}

// All subgroups of the group listed in `elements`, as joins of cyclic ones.
inline std::set<std::vector<bf::HolElement>> all_subgroups(
    const bf::GroupSpec& s, const std::vector<bf::HolElement>& elements) {
  std::set<std::vector<bf::HolElement>> cyclic;
  for (const bf::HolElement& x : elements) cyclic.insert(naive_closure(s, {x}));
  std::set<std::vector<bf::HolElement>> all = cyclic;
  std::vector<std::vector<bf::HolElement>> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<std::vector<bf::HolElement>> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<bf::HolElement> gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        auto k = naive_closure(s, gens);
        if (all.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return all;
}

inline std::vector<bf::HolElement> conjugate_set(const bf::GroupSpec& s, const bf::HolElement& x,
                                                 const std::vector<bf::HolElement>& h) {
  const bf::HolElement xi = bf::hol_inv(s, x);
  std::vector<bf::HolElement> out;
  for (const bf::HolElement& y : h) out.push_back(bf::hol_mul(s, bf::hol_mul(s, x, y), xi));
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit-minimal representatives of `subgroups` under conjugation by every
// element of `group`.
inline std::set<std::vector<bf::HolElement>> classes_under(
    const bf::GroupSpec& s, const std::vector<std::vector<bf::HolElement>>& subgroups,
    const std::vector<bf::HolElement>& group) {
  std::set<std::vector<bf::HolElement>> reps;
  for (const auto& h : subgroups) {
    std::vector<bf::HolElement> least = h;
    for (const bf::HolElement& x : group) least = std::min(least, conjugate_set(s, x, h));
    reps.insert(least);
  }
  return reps;
}

inline bool is_regular_naive(const bf::GroupSpec& s, const std::vector<bf::HolElement>& h) {
  if (h.size() != s.order()) return false;
  std::vector<bool> hit(s.order(), false);
  for (const bf::HolElement& x : h) {
    const std::uint64_t image = permutation(s, x)[0];
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

}  // namespace testing_support

#endif  // BRACEFORGE_TESTS_SUPPORT_HPP_
