#include "braceforge/linear_gfp.hpp"

#include <algorithm>

#include "braceforge/abelian.hpp"
#include "braceforge/errors.hpp"

namespace braceforge::gfp {

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) throw ContractError("zero has no inverse");
  // Fermat: a^(p-2).
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool advance(Vector& digits, std::int64_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<std::size_t> row_reduce(Matrix& m, std::int64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && mod(m[r][c], p) == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const std::int64_t inv = inverse(m[row][c], p);
    for (auto& v : m[row]) v = mod(v, p) * inv % p;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row) continue;
      const std::int64_t f = mod(m[k][c], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[k][j] = mod(m[k][j] - f * m[row][j], p);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<AffineSolution> solve(const Matrix& m, const Vector& b, std::size_t columns,
                                    std::int64_t p) {
  Matrix aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Vector row(columns + 1, 0);
    for (std::size_t j = 0; j < columns; ++j) row[j] = mod(m[i][j], p);
    row[columns] = mod(b[i], p);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = row_reduce(aug, p);
  if (!pivots.empty() && pivots.back() == columns) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(columns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][columns];
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-aug[r][free], p);
    sol.kernel_basis.push_back(std::move(v));
  }
  return sol;
}

std::vector<Matrix> enumerate_subspaces(std::size_t dim, std::int64_t p) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= dim; ++k) {
    // Pivot column sets of size k, as increasing index vectors.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      // Free positions: row r, column c > pivots[r] that is not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < dim; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      Vector digits(free.size(), 0);
      do {
        Matrix basis(k, Vector(dim, 0));
        for (std::size_t r = 0; r < k; ++r) basis[r][pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f)
          basis[free[f].first][free[f].second] = digits[f];
        out.push_back(std::move(basis));
      } while (advance(digits, p));
      // Next pivot combination.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == dim - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace braceforge::gfp
