#pragma once

#include <vector>

#include "asmc/ff.hpp"

namespace asmc {

/// Dense row-major matrix over the tower field.
class Matrix {
 public:
  Matrix(const TowerField& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const TowerField& field() const noexcept { return field_; }

 private:
  TowerField field_;
  std::size_t rows_, cols_;
  std::vector<Fe> data_;
};

struct RowEchelon {
  Matrix reduced;
  /// Pivot column of each nonzero row, increasing.
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one free column set to 1 per vector.
std::vector<std::vector<Fe>> kernel(const Matrix& m);
Fe determinant(Matrix m);

}  // namespace asmc
