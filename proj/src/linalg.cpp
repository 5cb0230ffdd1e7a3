#include "asmc/linalg.hpp"

#include <stdexcept>

namespace asmc {

Matrix::Matrix(const TowerField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    const Fe scale = m.at(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Fe f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Fe>> kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fe> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Fe determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Fe det = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col).is_zero()) ++sel;
    if (sel == n) return m.field().zero();
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    const Fe inv = m.at(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      const Fe f = m.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace asmc
