// Dense linear algebra over the prime field GF(p).

#ifndef BRACEFORGE_LINEAR_GFP_HPP_
#define BRACEFORGE_LINEAR_GFP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace braceforge::gfp {

using Vector = std::vector<std::int64_t>;
using Matrix = std::vector<Vector>;  // row major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::int64_t p);

// Solution set of m x = b: one particular solution plus a basis of the
// null space, or nullopt when the system is inconsistent.
struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel_basis;
};
std::optional<AffineSolution> solve(const Matrix& m, const Vector& b, std::size_t columns,
                                    std::int64_t p);

// Every subspace of GF(p)^dim, each given by the rows of its reduced echelon
// basis. Ordered by dimension, then lexicographically.
std::vector<Matrix> enumerate_subspaces(std::size_t dim, std::int64_t p);

std::int64_t inverse(std::int64_t a, std::int64_t p);

// Steps `digits` to the next vector in lexicographic order with entries in
// [0, base). Returns false after wrapping around to all zeros.
bool advance(Vector& digits, std::int64_t base);

}  // namespace braceforge::gfp

#endif  // BRACEFORGE_LINEAR_GFP_HPP_
