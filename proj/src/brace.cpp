#include "braceforge/brace.hpp"

#include <algorithm>
#include <sstream>

#include "braceforge/errors.hpp"
#include "braceforge/regularity.hpp"

namespace braceforge {

RegularSubgroup lambda_table(const GroupSpec& spec, const Subgroup& h) {
  if (!is_regular(spec, h)) throw ContractError("lambda table of a non-regular subgroup");
  RegularSubgroup r{spec, std::vector<Automorphism>(spec.order())};
  for (const HolElement& x : h.elements()) r.lambda[element_index(spec, x.g)] = x.alpha;
  return r;
}

Subgroup to_subgroup(const RegularSubgroup& r) {
  std::vector<HolElement> elements;
  for (std::uint64_t i = 0; i < r.lambda.size(); ++i)
    elements.push_back({element_at(r.spec, i), r.lambda[i]});
  std::sort(elements.begin(), elements.end());
  return Subgroup::from_sorted(std::move(elements));
}

Brace brace_from_regular(const RegularSubgroup& r) {
  const std::uint64_t n = r.spec.order();
  Brace b{r.spec, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n))};
  const std::vector<GroupElement> elements = enumerate_elements(r.spec);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      b.mul[i][j] = static_cast<std::uint32_t>(
          element_index(r.spec, add(r.spec, elements[i], apply(r.spec, r.lambda[i], elements[j]))));
  return b;
}

RegularSubgroup regular_from_brace(const Brace& b) {
  if (!verify_brace(b)) throw ContractError("not a brace");
  const GroupSpec& spec = b.spec;
  const std::vector<GroupElement> elements = enumerate_elements(spec);
  RegularSubgroup r{spec, {}};
  for (std::uint64_t a = 0; a < elements.size(); ++a) {
    IntMatrix rows(spec.rank(), std::vector<std::int64_t>(spec.rank()));
    for (std::size_t j = 0; j < spec.rank(); ++j) {
      const GroupElement& ab = elements[b.mul[a][element_index(spec, basis_element(spec, j))]];
      const GroupElement image = subtract(spec, ab, elements[a]);
      for (std::size_t i = 0; i < spec.rank(); ++i) rows[i][j] = image[i];
    }
    r.lambda.push_back(make_automorphism(spec, rows));
  }
  return r;
}

bool verify_brace(const Brace& b) {
  const GroupSpec& spec = b.spec;
  const std::size_t n = spec.order();
  if (b.mul.size() != n) return false;
  for (const auto& row : b.mul) {
    if (row.size() != n) return false;
    for (std::uint32_t v : row)
      if (v >= n) return false;
  }
  // Identity 0, and every row and column a permutation (a Latin square with
  // identity and associativity is a group).
  for (std::size_t a = 0; a < n; ++a)
    if (b.mul[0][a] != a || b.mul[a][0] != a) return false;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (row[b.mul[a][x]] || col[b.mul[x][a]]) return false;
      row[b.mul[a][x]] = col[b.mul[x][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (b.mul[b.mul[a][x]][y] != b.mul[a][b.mul[x][y]]) return false;
  const std::vector<GroupElement> elements = enumerate_elements(spec);
  std::vector<std::vector<std::uint32_t>> sum(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      sum[x][y] = static_cast<std::uint32_t>(element_index(spec, add(spec, elements[x], elements[y])));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const GroupElement rhs = subtract(
            spec, add(spec, elements[b.mul[a][x]], elements[b.mul[a][y]]), elements[a]);
        if (elements[b.mul[a][sum[x][y]]] != rhs) return false;
      }
  return true;
}

bool verify_lambda_cocycle(const RegularSubgroup& r) {
  const GroupSpec& spec = r.spec;
  if (r.lambda.size() != spec.order()) return false;
  if (r.lambda[0] != identity_automorphism(spec)) return false;
  const std::vector<GroupElement> elements = enumerate_elements(spec);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const GroupElement& g = elements[i];
    const Automorphism& lg = r.lambda[i];
    const Automorphism inv = invert(spec, lg);
    if (r.at(apply(spec, inv, negate(spec, g))) != inv) return false;
    for (const GroupElement& k : elements)
      if (r.at(add(spec, g, apply(spec, lg, k))) != compose(spec, lg, r.at(k))) return false;
  }
  return true;
}

std::vector<GroupElement> kernel_of_lambda(const RegularSubgroup& r) {
  const Automorphism id = identity_automorphism(r.spec);
  std::vector<GroupElement> out;
  for (std::uint64_t i = 0; i < r.lambda.size(); ++i)
    if (r.lambda[i] == id) out.push_back(element_at(r.spec, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_brace_file(const RegularSubgroup& r) {
  std::string out = "BRACEFORGE-BRACE 1\n" + r.spec.to_string() + "\n";
  for (std::uint64_t i = 0; i < r.lambda.size(); ++i)
    out += format_element(element_at(r.spec, i)) + " -> " + format_matrix(r.lambda[i]) + "\n";
  return out;
}

RegularSubgroup parse_brace_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "BRACEFORGE-BRACE 1")
    throw ParseError("missing BRACEFORGE-BRACE 1 header");
  if (!std::getline(in, line)) throw ParseError("missing group line");
  const GroupSpec spec = GroupSpec::parse(line);
  RegularSubgroup r{spec, std::vector<Automorphism>(spec.order())};
  std::vector<bool> filled(spec.order(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'g -> matrix' in '" + line + "'");
    std::string_view lhs = std::string_view(line).substr(0, arrow);
    while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
    std::string_view rhs = std::string_view(line).substr(arrow + 2);
    while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
    const std::uint64_t i = element_index(spec, parse_element(spec, lhs));
    if (filled[i]) throw ParseError("element " + std::string(lhs) + " listed twice");
    filled[i] = true;
    r.lambda[i] = parse_automorphism(spec, rhs);
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end())
    throw ParseError("lambda table is not total");
  return r;
}

}  // namespace braceforge
