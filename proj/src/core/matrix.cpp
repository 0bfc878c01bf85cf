#include "rota/core/matrix.hpp"

#include "rota/core/errors.hpp"

namespace rota {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
  const int n = static_cast<int>(diag.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = cols.empty() ? 0 : static_cast<int>(cols.front().size());
  Matrix m(r, c);
  for (int j = 0; j < c; ++j) {
    const auto& col = cols[static_cast<std::size_t>(j)];
    if (static_cast<int>(col.size()) != r) throw ValidationError("ragged matrix columns");
    for (int i = 0; i < r; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

}  // namespace rota
