#include "rota/core/linalg.hpp"

#include <utility>

#include "rota/core/errors.hpp"

namespace rota {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Scales every row by the lcm of its denominators. Returns the product of
// the scale factors.
BigInt lift_rows(const Matrix& m, IntRows& out) {
  out.assign(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  BigInt total = 1;
  for (int i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      const Scalar& v = m(i, j);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num() * (l / v.get_den());
    }
    total *= l;
  }
  return total;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  if (n == 0) return Scalar(1);
  IntRows a;
  const BigInt scale = lift_rows(m, a);
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Scalar(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Scalar det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Scalar determinant_of_columns(std::span<const std::vector<Scalar>> columns) {
  return determinant(Matrix::from_columns({columns.begin(), columns.end()}));
}

int matrix_rank(const Matrix& m) {
  IntRows a;
  lift_rows(m, a);
  const std::size_t rows = static_cast<std::size_t>(m.rows());
  const std::size_t cols = static_cast<std::size_t>(m.cols());
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

bool IncrementalIndependence::try_push(std::span<const Scalar> v) {
  if (static_cast<int>(v.size()) != dim_) throw ValidationError("vector length does not match dimension");
  std::vector<Scalar> w(v.begin(), v.end());
  for (const Row& row : rows_) {
    const Scalar factor = w[static_cast<std::size_t>(row.pivot)];
    if (is_zero(factor)) continue;
    for (std::size_t j = static_cast<std::size_t>(row.pivot); j < w.size(); ++j) {
      if (!is_zero(row.values[j])) w[j] -= factor * row.values[j];
    }
  }
  int pivot = 0;
  while (pivot < dim_ && is_zero(w[static_cast<std::size_t>(pivot)])) ++pivot;
  if (pivot == dim_) return false;
  const Scalar lead = w[static_cast<std::size_t>(pivot)];
  for (auto& x : w) x /= lead;
  rows_.push_back(Row{std::move(w), pivot});
  return true;
}

void IncrementalIndependence::pop() {
  if (!rows_.empty()) rows_.pop_back();
}

}  // namespace rota
