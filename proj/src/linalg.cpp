#include "sqas/linalg.hpp"

#include <stdexcept>

namespace sqas {

LinearSolution solve_linear(const Matrix& m, const std::vector<Scalar>& rhs, std::size_t columns) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
  Matrix a(rows, std::vector<Scalar>(columns + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != columns) throw std::invalid_argument("solve_linear: ragged matrix");
    for (std::size_t c = 0; c < columns; ++c) a[r][c] = m[r][c];
    a[r][columns] = rhs[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < columns && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    Scalar inv = a[row][c].inverse();
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (std::size_t k = c; k <= columns; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  LinearSolution out;
  for (std::size_t r = row; r < rows; ++r)
    if (!a[r][columns].is_zero()) return out;
  out.solvable = true;
  out.particular.assign(columns, Scalar());
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out.particular[pivot_col[r]] = a[r][columns];
  std::vector<char> is_pivot(columns, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(columns);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a(n, std::vector<Scalar>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw std::invalid_argument("invert: matrix not square");
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    a[r][n + r] = Scalar(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("invert: singular matrix");
    std::swap(a[p], a[c]);
    Scalar inv = a[c][c].inverse();
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Matrix out(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
  return out;
}

}  // namespace sqas
