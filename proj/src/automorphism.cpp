#include "braceforge/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

void check_rank(const GroupSpec& spec, const Automorphism& a) {
  if (a.rank != spec.rank())
    throw ShapeError("matrix of size " + std::to_string(a.rank) + " used with group " +
                     spec.to_string());
}

void check_shape(const GroupSpec& spec, const IntMatrix& m) {
  if (m.size() != spec.rank())
    throw ShapeError("matrix must have " + std::to_string(spec.rank()) + " rows");
  for (const auto& row : m)
    if (row.size() != spec.rank())
      throw ShapeError("matrix rows must have " + std::to_string(spec.rank()) + " entries");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    std::int64_t q = g / r;
    std::int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw ValidityError("not a unit");
  return mod(x, m);
}

// Exponent e with m = p^e, for a homocyclic p-group spec.
struct PrimePowerModulus {
  std::int64_t p;
  std::int64_t e;
  std::int64_t q;
};

std::optional<PrimePowerModulus> homocyclic_prime_power(const GroupSpec& spec) {
  if (!spec.is_homocyclic()) return std::nullopt;
  const std::int64_t q = spec.factor(0);
  auto p = prime_of_power(static_cast<std::uint64_t>(q));
  if (!p) return std::nullopt;
  std::int64_t e = 0;
  for (std::int64_t t = q; t > 1; t /= *p) ++e;
  return PrimePowerModulus{*p, e, q};
}

// Determinant modulo a prime by elimination.
std::int64_t det_mod_prime(const GroupSpec& spec, const Automorphism& a, std::int64_t p) {
  const std::size_t n = spec.rank();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = mod(a.at(i, j), p);
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = mod(-det, p);
    }
    det = det * m[c][c] % p;
    const std::int64_t inv = mod_inverse(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
    }
  }
  return det;
}

bool injective_by_enumeration(const GroupSpec& spec, const Automorphism& a) {
  for (std::uint64_t i = 1; i < spec.order(); ++i) {
    GroupElement image = apply(spec, a, element_at(spec, i));
    if (image == zero_element(spec)) return false;
  }
  return true;
}

Automorphism elementary(const GroupSpec& spec, std::size_t i, std::size_t j, std::int64_t value) {
  Automorphism a = identity_automorphism(spec);
  a.at(i, j) = static_cast<std::int32_t>(mod(a.at(i, j) + value, spec.factor(i)));
  return a;
}

// Generators of the unit group modulo p^e.
std::vector<std::int64_t> unit_generators(std::int64_t p, std::int64_t e, std::int64_t q) {
  if (p == 2) {
    if (e == 1) return {};
    if (e == 2) return {3};
    return {q - 1, 5};
  }
  // A primitive root g mod p lifts to g or g + p modulo every p^e.
  std::int64_t g = 2;
  auto is_primitive = [&](std::int64_t cand) {
    std::int64_t x = 1;
    for (std::int64_t k = 1; k < p - 1; ++k) {
      x = x * cand % p;
      if (x == 1) return false;
    }
    return true;
  };
  while (!is_primitive(g)) ++g;
  if (e > 1) {
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) x = x * g % (p * p);
    if (x == 1) g += p;
  }
  return {g % q};
}

// Greedy generating set of an explicitly listed group.
std::vector<Automorphism> greedy_generators(const GroupSpec& spec,
                                            const std::vector<Automorphism>& group) {
  std::vector<Automorphism> gens;
  std::unordered_set<Automorphism, AutomorphismHash> span;
  span.insert(identity_automorphism(spec));
  for (const Automorphism& a : group) {
    if (span.count(a)) continue;
    gens.push_back(a);
    auto closed = generate_matrix_group(spec, gens);
    span = std::unordered_set<Automorphism, AutomorphismHash>(closed.begin(), closed.end());
    if (span.size() == group.size()) break;
  }
  return gens;
}

// Sylow p-subgroup of an explicitly listed group, grown one element at a time
// inside the normaliser of the current p-subgroup.
std::vector<Automorphism> sylow_by_search(const GroupSpec& spec,
                                          const std::vector<Automorphism>& group,
                                          std::int64_t p) {
  const std::uint64_t target = p_part(group.size(), p);
  std::vector<Automorphism> gens;
  std::vector<Automorphism> current{identity_automorphism(spec)};
  std::unordered_set<Automorphism, AutomorphismHash> members(current.begin(), current.end());
  while (current.size() < target) {
    bool grown = false;
    for (const Automorphism& x : group) {
      if (members.count(x)) continue;
      const Automorphism xi = invert(spec, x);
      bool normalises = std::all_of(gens.begin(), gens.end(), [&](const Automorphism& g) {
        return members.count(compose(spec, compose(spec, x, g), xi)) > 0;
      });
      if (!normalises) continue;
      auto trial_gens = gens;
      trial_gens.push_back(x);
      auto trial = generate_matrix_group(spec, trial_gens);
      if (p_part(trial.size(), p) != trial.size()) continue;
      gens = std::move(trial_gens);
      current = std::move(trial);
      members = std::unordered_set<Automorphism, AutomorphismHash>(current.begin(), current.end());
      grown = true;
      break;
    }
    if (!grown) throw ContractError("Sylow search failed to extend a p-subgroup");
  }
  return greedy_generators(spec, current);
}

}  // namespace

std::size_t AutomorphismHash::operator()(const Automorphism& a) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  const std::size_t n = std::size_t{a.rank} * a.rank;
  for (std::size_t k = 0; k < n; ++k) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.entries[k]));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Automorphism identity_automorphism(const GroupSpec& spec) {
  Automorphism a;
  a.rank = static_cast<std::uint8_t>(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i) a.at(i, i) = 1;
  return a;
}

Automorphism make_matrix_unchecked(const GroupSpec& spec, const IntMatrix& rows) {
  check_shape(spec, rows);
  Automorphism a;
  a.rank = static_cast<std::uint8_t>(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i)
    for (std::size_t j = 0; j < spec.rank(); ++j)
      a.at(i, j) = static_cast<std::int32_t>(mod(rows[i][j], spec.factor(i)));
  return a;
}

Automorphism make_automorphism(const GroupSpec& spec, const IntMatrix& rows) {
  if (!is_automorphism(spec, rows))
    throw ValidityError("matrix is not an automorphism of " + spec.to_string());
  return make_matrix_unchecked(spec, rows);
}

IntMatrix to_rows(const Automorphism& a) {
  IntMatrix rows(a.rank, std::vector<std::int64_t>(a.rank));
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) rows[i][j] = a.at(i, j);
  return rows;
}

bool is_well_defined(const GroupSpec& spec, const IntMatrix& m) {
  check_shape(spec, m);
  for (std::size_t i = 0; i < spec.rank(); ++i)
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      // factors[i] | m[i][j] * factors[j], written without overflow.
      const std::int64_t step = spec.factor(i) / gcd(spec.factor(i), spec.factor(j));
      if (mod(m[i][j], step) != 0) return false;
    }
  return true;
}

bool is_automorphism(const GroupSpec& spec, const IntMatrix& m) {
  if (!is_well_defined(spec, m)) return false;
  return is_automorphism(spec, make_matrix_unchecked(spec, m));
}

bool is_automorphism(const GroupSpec& spec, const Automorphism& a) {
  check_rank(spec, a);
  if (!is_well_defined(spec, to_rows(a))) return false;
  if (auto pp = homocyclic_prime_power(spec)) return det_mod_prime(spec, a, pp->p) != 0;
  if (spec.order() > kDefaultEnumerationBound)
    throw CapacityError("bijectivity check needs to enumerate a group of order " +
                        std::to_string(spec.order()));
  return injective_by_enumeration(spec, a);
}

GroupElement apply(const GroupSpec& spec, const Automorphism& phi, const GroupElement& a) {
  check_rank(spec, phi);
  if (a.rank != spec.rank()) throw ShapeError("element rank does not match the matrix");
  GroupElement out = zero_element(spec);
  const std::size_t n = spec.rank();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += std::int64_t{phi.at(i, j)} * a[j];
    out[i] = static_cast<std::int32_t>(s % spec.factor(i));
  }
  return out;
}

Automorphism compose(const GroupSpec& spec, const Automorphism& phi, const Automorphism& psi) {
  check_rank(spec, phi);
  check_rank(spec, psi);
  Automorphism out;
  out.rank = phi.rank;
  const std::size_t n = spec.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += std::int64_t{phi.at(i, k)} * psi.at(k, j);
      out.at(i, j) = static_cast<std::int32_t>(s % spec.factor(i));
    }
  return out;
}

Automorphism invert(const GroupSpec& spec, const Automorphism& phi) {
  check_rank(spec, phi);
  const std::size_t n = spec.rank();
  Automorphism inv = identity_automorphism(spec);
  if (auto pp = homocyclic_prime_power(spec)) {
    // Gauss-Jordan over Z/p^e: a column of an invertible matrix always has a
    // unit among the remaining rows.
    const std::int64_t q = pp->q;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = phi.at(i, j);
      m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && m[pivot][c] % pp->p == 0) ++pivot;
      if (pivot == n) throw ValidityError("matrix is not invertible");
      std::swap(m[pivot], m[c]);
      const std::int64_t u = mod_inverse(m[c][c], q);
      for (auto& v : m[c]) v = v * u % q;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const std::int64_t f = m[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], q);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = static_cast<std::int32_t>(m[i][n + j]);
    return inv;
  }
  // Column j of the inverse is the preimage of the j-th standard generator.
  if (spec.order() > kDefaultEnumerationBound)
    throw CapacityError("inverting needs to enumerate a group of order " +
                        std::to_string(spec.order()));
  std::vector<bool> found(n, false);
  std::size_t remaining = n;
  for (std::uint64_t idx = 0; idx < spec.order() && remaining > 0; ++idx) {
    const GroupElement a = element_at(spec, idx);
    const GroupElement image = apply(spec, phi, a);
    for (std::size_t j = 0; j < n; ++j) {
      if (found[j] || image != basis_element(spec, j)) continue;
      for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = a[i];
      found[j] = true;
      --remaining;
    }
  }
  if (remaining > 0 || compose(spec, phi, inv) != identity_automorphism(spec))
    throw ValidityError("matrix is not invertible");
  return inv;
}

std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& spec, std::uint64_t bound) {
  const std::size_t n = spec.rank();
  std::vector<std::int64_t> steps(n * n), counts(n * n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t g = gcd(spec.factor(i), spec.factor(j));
      steps[i * n + j] = spec.factor(i) / g;
      counts[i * n + j] = g;
      if (total > bound / static_cast<std::uint64_t>(g))
        throw CapacityError("too many candidate matrices for " + spec.to_string());
      total *= static_cast<std::uint64_t>(g);
    }
  std::vector<std::int64_t> digits(n * n, 0);
  std::vector<Automorphism> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    Automorphism a;
    a.rank = static_cast<std::uint8_t>(n);
    for (std::size_t k = 0; k < n * n; ++k)
      a.entries[k] = static_cast<std::int32_t>(digits[k] * steps[k]);
    if (is_automorphism(spec, a)) out.push_back(a);
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < counts[k]) break;
      digits[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> generate_matrix_group(const GroupSpec& spec,
                                                std::span<const Automorphism> gens,
                                                std::uint64_t bound) {
  const Automorphism id = identity_automorphism(spec);
  std::unordered_set<Automorphism, AutomorphismHash> seen{id};
  std::deque<Automorphism> queue{id};
  while (!queue.empty()) {
    const Automorphism x = queue.front();
    queue.pop_front();
    for (const Automorphism& g : gens) {
      Automorphism y = compose(spec, x, g);
      if (seen.insert(y).second) {
        if (seen.size() > bound) throw CapacityError("matrix group exceeds the closure bound");
        queue.push_back(y);
      }
    }
  }
  std::vector<Automorphism> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> aut_generators(const GroupSpec& spec) {
  if (auto pp = homocyclic_prime_power(spec)) {
    std::vector<Automorphism> gens;
    const std::size_t n = spec.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) gens.push_back(elementary(spec, i, j, 1));
    for (std::int64_t u : unit_generators(pp->p, pp->e, pp->q)) {
      Automorphism d = identity_automorphism(spec);
      d.at(0, 0) = static_cast<std::int32_t>(u);
      gens.push_back(d);
    }
    return gens;
  }
  return greedy_generators(spec, enumerate_automorphisms(spec));
}

std::vector<Automorphism> sylow_p_aut_generators(const GroupSpec& spec, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  auto pp = homocyclic_prime_power(spec);
  if (pp && pp->p == p) {
    std::vector<Automorphism> gens;
    const std::size_t n = spec.rank();
    // Kernel of reduction modulo p: I + p^k E_ij.
    std::int64_t pk = p;
    for (std::int64_t k = 1; k < pp->e; ++k, pk *= p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(elementary(spec, i, j, pk));
    // Lifts of the upper unitriangular group modulo p.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) gens.push_back(elementary(spec, i, j, 1));
    return gens;
  }
  return sylow_by_search(spec, enumerate_automorphisms(spec), p);
}

std::uint64_t aut_order(const GroupSpec& spec) {
  if (auto pp = homocyclic_prime_power(spec)) {
    const auto n = spec.rank();
    const auto p = static_cast<std::uint64_t>(pp->p);
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;
    std::uint64_t order = 1;
    for (std::int64_t k = 0; k < (pp->e - 1) * static_cast<std::int64_t>(n * n); ++k) order *= p;
    std::uint64_t pi = 1;
    for (std::size_t i = 0; i < n; ++i, pi *= p) order *= pn - pi;
    return order;
  }
  return enumerate_automorphisms(spec).size();
}

std::string format_matrix(const Automorphism& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rank; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.rank; ++j) {
      if (j) out += ',';
      out += std::to_string(a.at(i, j));
    }
  }
  return out;
}

IntMatrix parse_int_matrix(std::string_view text) {
  IntMatrix rows;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    rows.push_back(parse_integer_list(
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start),
        ','));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return rows;
}

Automorphism parse_automorphism(const GroupSpec& spec, std::string_view text) {
  IntMatrix rows = parse_int_matrix(text);
  if (rows.size() != spec.rank())
    throw ParseError("matrix '" + std::string(text) + "' does not have " +
                     std::to_string(spec.rank()) + " rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != spec.rank())
      throw ParseError("matrix row has the wrong length in '" + std::string(text) + "'");
    for (std::int64_t v : rows[i])
      if (v < 0 || v >= spec.factor(i))
        throw ParseError("matrix entry out of range in '" + std::string(text) + "'");
  }
  try {
    return make_automorphism(spec, rows);
  } catch (const ValidityError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

}  // namespace braceforge
