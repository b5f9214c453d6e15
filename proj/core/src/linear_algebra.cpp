#include "newton_osc/linear_algebra.hpp"

#include <utility>

#include "newton_osc/errors.hpp"

namespace newton_osc {

RationalMatrix to_rational_matrix(const std::vector<IntVector>& rows) {
  RationalMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return row_reduce(rows, columns).size();
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col].size() != n) throw Error(ErrorKind::kInternal, "not_square", "determinant of non-square matrix");
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b.at(i));
  auto pivots = row_reduce(a, n);
  if (pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<RationalVector> coordinates_in_basis(const std::vector<IntVector>& generators,
                                                   const RationalVector& v) {
  const std::size_t n = v.size();
  if (generators.size() != n) return std::nullopt;
  RationalMatrix a(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j][i] = Rational(static_cast<long>(generators[i][j]));
  }
  return solve(std::move(a), v);
}

RationalVector kernel_vector(RationalMatrix rows, std::size_t columns) {
  auto pivots = row_reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = columns;
  for (std::size_t c = 0; c < columns; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == columns) throw Error(ErrorKind::kInternal, "trivial_kernel", "kernel_vector: full column rank");
  RationalVector k(columns, 0);
  k[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -rows[r][free_col];
  return k;
}

}  // namespace newton_osc
