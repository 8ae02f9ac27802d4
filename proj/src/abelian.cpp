#include "braceforge/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

void check_rank(const GroupSpec& spec, const GroupElement& a) {
  if (a.rank != spec.rank())
    throw ShapeError("element of rank " + std::to_string(a.rank) + " used with group " +
                     spec.to_string());
}

}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / gcd(a, b) * b; }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::int64_t> prime_of_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<std::int64_t>(p);
}

std::uint64_t p_part(std::uint64_t n, std::int64_t p) {
  std::uint64_t part = 1;
  const auto up = static_cast<std::uint64_t>(p);
  while (n % up == 0) {
    n /= up;
    part *= up;
  }
  return part;
}

std::vector<std::int64_t> parse_integer_list(std::string_view text, char separator) {
  std::vector<std::int64_t> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(separator, start);
    std::string_view token = trim(text.substr(start, end == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : end - start));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("not an integer: '" + std::string(token) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ShapeError("a group spec needs at least one factor");
  if (factors_.size() > kMaxRank)
    throw CapacityError("at most " + std::to_string(kMaxRank) + " cyclic factors are supported");
  for (std::int64_t f : factors_) {
    if (f < 2) throw ShapeError("cyclic factor orders must be >= 2");
    if (f > (std::int64_t{1} << 30)) throw CapacityError("cyclic factor too large");
    if (order_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(f))
      throw CapacityError("group order overflows");
    order_ *= static_cast<std::uint64_t>(f);
    exponent_ = lcm(exponent_, f);
  }
}

GroupSpec GroupSpec::parse(std::string_view text) { return GroupSpec(parse_integer_list(text, ',')); }

GroupSpec GroupSpec::canonical() const {
  // Split every factor into prime powers, then recombine the largest powers
  // of each prime into the largest invariant factor, and so on.
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (std::int64_t f : factors_) {
    std::int64_t n = f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t count = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    count = std::max(count, list.size());
  }
  std::vector<std::int64_t> invariants(count, 1);
  for (auto& [p, list] : powers)
    for (std::size_t k = 0; k < list.size(); ++k) invariants[count - 1 - k] *= list[k];
  return GroupSpec(std::move(invariants));
}

std::optional<std::int64_t> GroupSpec::p_group_prime() const { return prime_of_power(order_); }

bool GroupSpec::is_homocyclic() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](std::int64_t f) { return f == factors_.front(); });
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

GroupElement zero_element(const GroupSpec& spec) {
  GroupElement z;
  z.rank = static_cast<std::uint8_t>(spec.rank());
  return z;
}

GroupElement make_element(const GroupSpec& spec, std::span<const std::int64_t> residues) {
  if (residues.size() != spec.rank())
    throw ShapeError("expected " + std::to_string(spec.rank()) + " residues, got " +
                     std::to_string(residues.size()));
  GroupElement a = zero_element(spec);
  for (std::size_t i = 0; i < residues.size(); ++i)
    a[i] = static_cast<std::int32_t>(mod(residues[i], spec.factor(i)));
  return a;
}

GroupElement basis_element(const GroupSpec& spec, std::size_t i) {
  GroupElement a = zero_element(spec);
  a[i] = 1;
  return a;
}

bool is_valid_element(const GroupSpec& spec, const GroupElement& a) {
  if (a.rank != spec.rank()) return false;
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    if (i < spec.rank()) {
      if (a[i] < 0 || a[i] >= spec.factor(i)) return false;
    } else if (a[i] != 0) {
      return false;
    }
  }
  return true;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  check_rank(spec, a);
  check_rank(spec, b);
  GroupElement c = a;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::int64_t s = std::int64_t{a[i]} + b[i];
    if (s >= spec.factor(i)) s -= spec.factor(i);
    c[i] = static_cast<std::int32_t>(s);
  }
  return c;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& a) {
  check_rank(spec, a);
  GroupElement c = a;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    c[i] = a[i] == 0 ? 0 : static_cast<std::int32_t>(spec.factor(i) - a[i]);
  return c;
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return add(spec, a, negate(spec, b));
}

GroupElement scale(const GroupSpec& spec, std::int64_t k, const GroupElement& a) {
  check_rank(spec, a);
  GroupElement c = a;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    c[i] = static_cast<std::int32_t>(mod(k % spec.factor(i) * a[i], spec.factor(i)));
  return c;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& a) {
  check_rank(spec, a);
  std::int64_t order = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    order = lcm(order, spec.factor(i) / gcd(a[i], spec.factor(i)));
  return order;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::uint64_t bound) {
  if (spec.order() > bound)
    throw CapacityError("group of order " + std::to_string(spec.order()) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::uint64_t i = 0; i < spec.order(); ++i) out.push_back(element_at(spec, i));
  return out;
}

std::uint64_t element_index(const GroupSpec& spec, const GroupElement& a) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    index = index * static_cast<std::uint64_t>(spec.factor(i)) + static_cast<std::uint64_t>(a[i]);
  return index;
}

GroupElement element_at(const GroupSpec& spec, std::uint64_t index) {
  GroupElement a = zero_element(spec);
  for (std::size_t i = spec.rank(); i-- > 0;) {
    const auto f = static_cast<std::uint64_t>(spec.factor(i));
    a[i] = static_cast<std::int32_t>(index % f);
    index /= f;
  }
  return a;
}

std::string format_element(const GroupElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rank; ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  std::vector<std::int64_t> residues = parse_integer_list(text, ',');
  if (residues.size() != spec.rank())
    throw ParseError("element '" + std::string(text) + "' does not have " +
                     std::to_string(spec.rank()) + " coordinates");
  for (std::size_t i = 0; i < residues.size(); ++i)
    if (residues[i] < 0 || residues[i] >= spec.factor(i))
      throw ParseError("coordinate out of range in '" + std::string(text) + "'");
  return make_element(spec, residues);
}

}  // namespace braceforge
