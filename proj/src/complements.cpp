#include "braceforge/complements.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "braceforge/errors.hpp"
#include "braceforge/linear_gfp.hpp"
#include "braceforge/series.hpp"

namespace braceforge {

namespace {

void check_preconditions(const GroupSpec& spec, const Subgroup& a, const Subgroup& n,
                         const Subgroup& b) {
  if (!b.is_subset_of(n) || !n.is_subset_of(a))
    throw ContractError("complements need B <= N <= A");
  const std::vector<HolElement> a_gens = generators_of(spec, a);
  if (!is_normal_in(spec, n, a_gens)) throw ContractError("N is not normal in A");
  if (!is_normal_in(spec, b, a_gens)) throw ContractError("B is not normal in A");
}

// One letter of a relator: generator index and exponent +1 or -1.
struct Letter {
  std::size_t gen;
  int sign;
};

// A composition series A = C_0 > C_1 > ... > C_k = N with prime indices,
// and generators a_j in C_j \ C_{j+1}.
struct PcChain {
  std::vector<HolElement> gens;
  std::vector<HolElement> inverses;
  std::vector<std::int64_t> primes;
  std::vector<Subgroup> terms;

  // Exponent vector of x modulo N; x must lie in C_from.
  std::vector<std::int64_t> sift(const GroupSpec& spec, HolElement x, std::size_t from) const {
    std::vector<std::int64_t> exps(gens.size(), 0);
    for (std::size_t j = from; j < gens.size(); ++j) {
      std::int64_t e = 0;
      while (!terms[j + 1].contains(x)) {
        x = hol_mul(spec, inverses[j], x);
        if (++e >= primes[j]) throw ContractError("element does not sift through the chain");
      }
      exps[j] = e;
    }
    return exps;
  }
};

PcChain build_chain(const GroupSpec& spec, const Subgroup& a, const Subgroup& n) {
  PcChain chain;
  const std::vector<Subgroup> series = relative_elementary_series(spec, a, n);
  chain.terms.push_back(a);
  for (std::size_t t = 0; t + 1 < series.size(); ++t) {
    const Subgroup& top = series[t];
    const Subgroup& bottom = series[t + 1];
    const std::int64_t q =
        *prime_of_power(static_cast<std::uint64_t>(top.order() / bottom.order()));
    const std::vector<HolElement> basis = generators_modulo(spec, top, bottom);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      chain.gens.push_back(basis[j]);
      chain.inverses.push_back(hol_inv(spec, basis[j]));
      chain.primes.push_back(q);
      std::vector<HolElement> rest(basis.begin() + static_cast<std::ptrdiff_t>(j) + 1, basis.end());
      chain.terms.push_back(rest.empty() ? bottom : closure_with(spec, bottom, rest));
    }
  }
  return chain;
}

std::vector<Letter> word_of(const std::vector<std::int64_t>& exps) {
  std::vector<Letter> word;
  for (std::size_t j = 0; j < exps.size(); ++j)
    for (std::int64_t e = 0; e < exps[j]; ++e) word.push_back({j, +1});
  return word;
}

// w^-1 as a word.
std::vector<Letter> inverse_word(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

// Relators of the polycyclic presentation: a_j^q = w_jj and
// a_i^-1 a_j a_i = w_ij, each written as w^-1 * (left-hand side).
std::vector<std::vector<Letter>> relators(const GroupSpec& spec, const PcChain& chain) {
  std::vector<std::vector<Letter>> out;
  const std::size_t k = chain.gens.size();
  for (std::size_t j = 0; j < k; ++j) {
    const HolElement power = hol_pow(spec, chain.gens[j], chain.primes[j]);
    std::vector<Letter> rel = inverse_word(word_of(chain.sift(spec, power, j + 1)));
    for (std::int64_t e = 0; e < chain.primes[j]; ++e) rel.push_back({j, +1});
    out.push_back(std::move(rel));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const HolElement conj =
          hol_mul(spec, hol_mul(spec, chain.inverses[i], chain.gens[j]), chain.gens[i]);
      std::vector<Letter> rel = inverse_word(word_of(chain.sift(spec, conj, i + 1)));
      rel.push_back({i, -1});
      rel.push_back({j, +1});
      rel.push_back({i, +1});
      out.push_back(std::move(rel));
    }
  return out;
}

// Matrix of v -> y^-1 v y on the section, column l the image of basis l.
gfp::Matrix conjugation_matrix(const GroupSpec& spec, const SectionSpace& space,
                               const HolElement& y) {
  const std::size_t d = space.dimension();
  const HolElement yi = hol_inv(spec, y);
  gfp::Matrix m(d, gfp::Vector(d, 0));
  for (std::size_t l = 0; l < d; ++l) {
    const gfp::Vector& c = space.coordinates(hol_mul(spec, hol_mul(spec, yi, space.basis()[l]), y));
    for (std::size_t r = 0; r < d; ++r) m[r][l] = c[r];
  }
  return m;
}

}  // namespace

std::vector<Subgroup> complements(const GroupSpec& spec, const Subgroup& a, const Subgroup& n,
                                  const Subgroup& b, const ComplementOptions& options) {
  check_preconditions(spec, a, n, b);
  if (n.order() == b.order()) return {a};
  auto p = prime_of_power(n.order() / b.order());
  if (!p) throw ContractError("N/B is not a p-group");
  const SectionSpace space(spec, n, b, *p);
  if (a.order() == n.order()) return {b};

  const PcChain chain = build_chain(spec, a, n);
  const std::size_t k = chain.gens.size();
  const std::size_t d = space.dimension();
  const std::int64_t q = *p;

  gfp::Matrix system;
  gfp::Vector rhs;
  for (const std::vector<Letter>& rel : relators(spec, chain)) {
    gfp::Matrix rows(d, gfp::Vector(k * d, 0));
    HolElement suffix = hol_identity(spec);
    for (auto it = rel.rbegin(); it != rel.rend(); ++it) {
      int sign = +1;
      if (it->sign > 0) {
        // a n followed by the suffix: n moves right as suffix^-1 n suffix.
        const gfp::Matrix m = conjugation_matrix(spec, space, suffix);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t l = 0; l < d; ++l) rows[r][it->gen * d + l] += m[r][l];
        suffix = hol_mul(spec, chain.gens[it->gen], suffix);
      } else {
        // n^-1 a^-1 followed by the suffix.
        suffix = hol_mul(spec, chain.inverses[it->gen], suffix);
        sign = -1;
        const gfp::Matrix m = conjugation_matrix(spec, space, suffix);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t l = 0; l < d; ++l) rows[r][it->gen * d + l] += sign * m[r][l];
      }
    }
    // The suffix now evaluates the whole relator on the chosen generators.
    const gfp::Vector& value = space.coordinates(suffix);
    for (std::size_t r = 0; r < d; ++r) {
      system.push_back(std::move(rows[r]));
      rhs.push_back(-value[r]);
    }
  }

  auto solution = gfp::solve(system, rhs, k * d, q);
  if (!solution) return {};
  std::size_t count = 1;
  for (std::size_t i = 0; i < solution->kernel_basis.size(); ++i) {
    if (count > options.max_complements / static_cast<std::size_t>(q))
      throw CapacityError("more than " + std::to_string(options.max_complements) +
                          " complements");
    count *= static_cast<std::size_t>(q);
  }

  const std::size_t expected = a.order() / n.order() * b.order();
  std::vector<Subgroup> out;
  gfp::Vector coeffs(solution->kernel_basis.size(), 0);
  do {
    gfp::Vector x = solution->particular;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
      for (std::size_t c = 0; c < x.size(); ++c)
        x[c] = (x[c] + coeffs[t] * solution->kernel_basis[t][c]) % q;
    std::vector<HolElement> gens;
    for (std::size_t j = 0; j < k; ++j) {
      gfp::Vector v(x.begin() + static_cast<std::ptrdiff_t>(j * d),
                    x.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
      gens.push_back(hol_mul(spec, chain.gens[j], space.lift(spec, v)));
    }
    Subgroup u = closure_with(spec, b, gens);
    if (u.order() != expected) throw ContractError("cocycle solution does not give a complement");
    out.push_back(std::move(u));
  } while (gfp::advance(coeffs, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> complements_brute_force(const GroupSpec& spec, const Subgroup& a,
                                              const Subgroup& n, const Subgroup& b) {
  check_preconditions(spec, a, n, b);
  const std::vector<HolElement> coset_gens = generators_modulo(spec, a, n);

  // One representative per coset of B in N.
  std::vector<HolElement> reps;
  std::unordered_set<HolElement, HolElementHash> covered;
  for (const HolElement& x : n.elements()) {
    if (covered.count(x)) continue;
    reps.push_back(x);
    for (const HolElement& y : b.elements()) covered.insert(hol_mul(spec, x, y));
  }

  const std::size_t expected = a.order() / n.order() * b.order();
  std::set<Subgroup> found;
  std::vector<std::size_t> choice(coset_gens.size(), 0);
  while (true) {
    std::vector<HolElement> gens;
    for (std::size_t i = 0; i < coset_gens.size(); ++i)
      gens.push_back(hol_mul(spec, coset_gens[i], reps[choice[i]]));
    Subgroup u = closure_with(spec, b, gens, a.order());
    if (u.order() == expected) {
      std::size_t in_n = 0;
      for (const HolElement& x : u.elements()) in_n += n.contains(x) ? 1 : 0;
      if (in_n == b.order()) found.insert(std::move(u));
    }
    std::size_t i = choice.size();
    while (i > 0 && ++choice[i - 1] == reps.size()) choice[--i] = 0;
    if (i == 0) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace braceforge
