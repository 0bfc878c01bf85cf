#pragma once

#include <vector>

#include "rota/core/scalar.hpp"

namespace rota {

/// Dense rational matrix, row-major, 0-based (row, col) access.
/// column(i) is the 1-based column A[i + 1].
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Scalar>& diag);
  /// cols[c] becomes column c; all columns must have equal length.
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  std::vector<Scalar> column(int c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace rota
