#include "braceforge/group_table.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

using Index = std::uint32_t;

std::vector<Index> inverses(const GroupTable& t) {
  std::vector<Index> inv(t.order());
  for (Index a = 0; a < t.order(); ++a)
    for (Index b = 0; b < t.order(); ++b)
      if (t.mul[a][b] == t.identity) inv[a] = b;
  return inv;
}

std::vector<std::uint64_t> element_orders(const GroupTable& t) {
  std::vector<std::uint64_t> orders(t.order());
  for (Index a = 0; a < t.order(); ++a) {
    std::uint64_t k = 1;
    for (Index x = a; x != t.identity; x = t.mul[x][a]) ++k;
    orders[a] = k;
  }
  return orders;
}

// The subgroup generated by `gens`, as a membership mask.
std::vector<bool> generated(const GroupTable& t, const std::vector<Index>& gens) {
  std::vector<bool> in(t.order(), false);
  std::vector<Index> queue{t.identity};
  in[t.identity] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Index g : gens) {
      const Index y = t.mul[queue[i]][g];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  return in;
}

// Invariant factors of the abelian group whose element orders are `orders`.
std::vector<std::uint64_t> abelian_invariants(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  // Per prime, the cyclic factor exponents, largest first.
  std::vector<std::vector<std::uint64_t>> powers;
  for (std::uint64_t p : primes) {
    std::vector<std::uint64_t> counts{1};  // #{x : x^(p^k) = 1}
    for (std::uint64_t pk = p;; pk *= p) {
      std::uint64_t c = 0;
      for (std::uint64_t o : orders) c += (pk % o == 0) ? 1 : 0;
      if (c == counts.back()) break;
      counts.push_back(c);
    }
    // Number of cyclic factors of order at least p^k is log_p(c_k / c_{k-1}).
    std::vector<std::uint64_t> at_least;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::uint64_t ratio = counts[k] / counts[k - 1], r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least.push_back(r);
    }
    std::vector<std::uint64_t> factors;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::uint64_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::uint64_t q = 1;
      for (std::size_t e = 0; e <= k; ++e) q *= p;
      for (std::uint64_t i = 0; i < exactly; ++i) factors.push_back(q);
    }
    std::sort(factors.rbegin(), factors.rend());
    powers.push_back(factors);
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0;; ++i) {
    std::uint64_t f = 1;
    bool any = false;
    for (const auto& fs : powers)
      if (i < fs.size()) {
        f *= fs[i];
        any = true;
      }
    if (!any) break;
    out.push_back(f);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const GroupTable& a, const GroupTable& b)
      : a_(a), b_(b), a_orders_(element_orders(a)), b_orders_(element_orders(b)) {
    // Greedy generators of A, highest order first.
    std::vector<Index> by_order(a.order());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Index x, Index y) { return a_orders_[x] > a_orders_[y]; });
    std::vector<bool> covered = generated(a, {});
    for (Index x : by_order) {
      if (covered[x]) continue;
      gens_.push_back(x);
      covered = generated(a, gens_);
    }
  }

  bool run() {
    images_.clear();
    return extend();
  }

 private:
  bool extend() {
    if (!consistent()) return false;
    if (images_.size() == gens_.size()) return true;
    const Index g = gens_[images_.size()];
    for (Index y = 0; y < b_.order(); ++y) {
      if (b_orders_[y] != a_orders_[g]) continue;
      images_.push_back(y);
      if (extend()) return true;
      images_.pop_back();
    }
    return false;
  }

  // Whether the generators assigned so far extend to an injective
  // homomorphism on the subgroup they generate.
  bool consistent() const {
    const Index none = static_cast<Index>(a_.order());
    std::vector<Index> phi(a_.order(), none);
    std::vector<bool> used(b_.order(), false);
    phi[a_.identity] = b_.identity;
    used[b_.identity] = true;
    std::vector<Index> queue{a_.identity};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t k = 0; k < images_.size(); ++k) {
        const Index x = a_.mul[queue[i]][gens_[k]];
        const Index y = b_.mul[phi[queue[i]]][images_[k]];
        if (phi[x] == none) {
          if (used[y]) return false;
          phi[x] = y;
          used[y] = true;
          queue.push_back(x);
        } else if (phi[x] != y) {
          return false;
        }
      }
    return true;
  }

  const GroupTable& a_;
  const GroupTable& b_;
  std::vector<std::uint64_t> a_orders_, b_orders_;
  std::vector<Index> gens_;
  std::vector<Index> images_;
};

}  // namespace

void validate_group_table(const GroupTable& t) {
  const std::size_t n = t.order();
  if (n == 0 || n > kGroupTableBound)
    throw ContractError("group table of order " + std::to_string(n) + " is out of range");
  for (const auto& row : t.mul) {
    if (row.size() != n) throw ContractError("group table is not square");
    for (Index v : row)
      if (v >= n) throw ContractError("group table entry out of range");
  }
  if (t.identity >= n) throw ContractError("identity out of range");
  for (Index a = 0; a < n; ++a)
    if (t.mul[t.identity][a] != a || t.mul[a][t.identity] != a)
      throw ContractError("table has no identity");
  for (Index a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (Index x = 0; x < n; ++x) {
      if (seen[t.mul[a][x]]) throw ContractError("table rows are not permutations");
      seen[t.mul[a][x]] = true;
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw ContractError("table is not associative");
}

GroupTable table_of(const GroupSpec& spec, const Subgroup& h) {
  const auto elements = h.elements();
  GroupTable t;
  t.mul.assign(h.order(), std::vector<Index>(h.order()));
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j) {
      const HolElement x = hol_mul(spec, elements[i], elements[j]);
      t.mul[i][j] = static_cast<Index>(
          std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
    }
  t.identity = static_cast<Index>(
      std::lower_bound(elements.begin(), elements.end(), hol_identity(spec)) - elements.begin());
  return t;
}

std::string Fingerprint::canonical() const {
  std::string hist;
  for (const auto& [o, c] : order_histogram) {
    if (!hist.empty()) hist += ',';
    hist += std::to_string(o) + ":" + std::to_string(c);
  }
  return "order=" + std::to_string(group_order) + " exp=" + std::to_string(exponent) + " ab=[" +
         join(abelianization) + "] z=" + std::to_string(center_order) +
         " d=" + std::to_string(derived_order) + " orders={" + hist + "} classes=[" +
         join(class_sizes) + "]";
}

std::string Fingerprint::id() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Fingerprint group_fingerprint(const GroupTable& t) {
  validate_group_table(t);
  const std::size_t n = t.order();
  const std::vector<Index> inv = inverses(t);
  const std::vector<std::uint64_t> orders = element_orders(t);

  Fingerprint f;
  f.group_order = n;
  f.exponent = 1;
  for (std::uint64_t o : orders) {
    f.exponent = std::lcm(f.exponent, o);
    ++f.order_histogram[o];
  }

  for (Index a = 0; a < n; ++a) {
    bool central = true;
    for (Index b = 0; b < n && central; ++b) central = t.mul[a][b] == t.mul[b][a];
    f.center_order += central ? 1 : 0;
  }

  std::vector<Index> commutators;
  {
    std::vector<bool> seen(n, false);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const Index c = t.mul[t.mul[inv[a]][inv[b]]][t.mul[a][b]];
        if (!seen[c]) {
          seen[c] = true;
          commutators.push_back(c);
        }
      }
  }
  const std::vector<bool> derived = generated(t, commutators);
  f.derived_order = static_cast<std::uint64_t>(std::count(derived.begin(), derived.end(), true));

  // Orders of the cosets in G/[G,G], one entry per coset.
  std::vector<std::uint64_t> quotient_orders;
  {
    std::vector<bool> covered(n, false);
    for (Index a = 0; a < n; ++a) {
      if (covered[a]) continue;
      for (Index d = 0; d < n; ++d)
        if (derived[d]) covered[t.mul[a][d]] = true;
      std::uint64_t k = 1;
      for (Index x = a; !derived[x]; x = t.mul[x][a]) ++k;
      quotient_orders.push_back(k);
    }
  }
  f.abelianization = abelian_invariants(quotient_orders);

  std::vector<bool> done(n, false);
  for (Index a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::uint64_t size = 0;
    for (Index g = 0; g < n; ++g) {
      const Index c = t.mul[t.mul[g][a]][inv[g]];
      if (!done[c]) {
        done[c] = true;
        ++size;
      }
    }
    f.class_sizes.push_back(size);
  }
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

bool are_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (group_fingerprint(a) != group_fingerprint(b)) return false;
  return IsoSearch(a, b).run();
}

}  // namespace braceforge
