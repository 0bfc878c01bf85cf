#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "rota/core/levi_civita.hpp"
#include "rota/core/matrix.hpp"
#include "rota/core/permutation.hpp"
#include "rota/core/tensor.hpp"

// Brute-force reference computations. None of these share code paths with
// the library routines they check beyond the basic containers.
namespace rota::testing {

/// Direct d-fold sum Y(i) = sum_j prod_k A_k(i_k, j_k) X(j).
inline DenseTensor naive_multilinear(const std::vector<Matrix>& mats, const DenseTensor& x) {
  DenseTensor y(x.order(), x.dim());
  for (std::size_t oi = 0; oi < y.size(); ++oi) {
    const Index i = y.index_of(oi);
    Scalar sum = 0;
    for (std::size_t oj = 0; oj < x.size(); ++oj) {
      const Index j = x.index_of(oj);
      Scalar term = x[oj];
      for (std::size_t k = 0; k < i.size() && !is_zero(term); ++k) {
        term *= mats[k](i[k] - 1, j[k] - 1);
      }
      sum += term;
    }
    y[oi] = sum;
  }
  return y;
}

/// Laplace expansion along the first row.
inline Scalar cofactor_det(const Matrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar det = 0;
  for (int c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int j = 0; j < n; ++j) {
        if (j != c) minor(i - 1, cc++) = m(i, j);
      }
    }
    const Scalar term = m(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Scalar(-term);
  }
  return det;
}

/// Rank by Gauss-Jordan elimination directly over Q.
inline int gauss_rank(Matrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = rank;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(p, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) / m(rank, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// The d = 2 tensor as an n x n matrix (row = first coordinate).
inline Matrix flatten2(const DenseTensor& t) {
  Matrix m(t.dim(), t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = 0; j < t.dim(); ++j) m(i, j) = t.at(std::vector<int>{i + 1, j + 1});
  }
  return m;
}

/// P_{M,pi}(X) as the full sum over all n^(dM) tuples (J_1, ..., J_d).
inline Scalar naive_invariant(const DenseTensor& x, int degree, const std::vector<Permutation>& perms) {
  const int d = x.order();
  const int n = x.dim();
  const std::size_t slots = static_cast<std::size_t>(d * degree);
  std::vector<int> maps(slots, 1);  // maps[k * degree + i] = J_k(i + 1)
  Scalar total = 0;
  std::vector<int> composed(static_cast<std::size_t>(degree));
  while (true) {
    int sign = 1;
    for (int k = 0; k < d && sign != 0; ++k) {
      for (int i = 0; i < degree; ++i) {
        composed[static_cast<std::size_t>(i)] = maps[static_cast<std::size_t>(k * degree + perms[static_cast<std::size_t>(k)](i + 1) - 1)];
      }
      for (int b = 0; b < degree && sign != 0; b += n) {
        sign *= levi_civita_symbol(std::span<const int>(composed).subspan(static_cast<std::size_t>(b), static_cast<std::size_t>(n)));
      }
    }
    if (sign != 0) {
      Scalar prod = sign;
      for (int i = 0; i < degree && !is_zero(prod); ++i) {
        Index idx(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) idx[static_cast<std::size_t>(k)] = maps[static_cast<std::size_t>(k * degree + i)];
        prod *= x.at(idx);
      }
      total += prod;
    }
    std::size_t pos = slots;
    while (pos > 0 && maps[pos - 1] == n) maps[--pos] = 1;
    if (pos == 0) break;
    ++maps[pos - 1];
  }
  return total;
}

/// Exhaustive min over labelings of sum_j |pi_j(Gamma_j)|, returning the
/// minimum and the lexicographically least labeling attaining it.
inline std::pair<int, std::vector<int>> brute_force_partition(const std::vector<Index>& points, int order) {
  std::vector<int> labels(points.size(), 1);
  int best = -1;
  std::vector<int> best_labels;
  while (true) {
    int cost = 0;
    for (int j = 1; j <= order; ++j) {
      std::vector<int> seen;
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (labels[p] != j) continue;
        const int v = points[p][static_cast<std::size_t>(j - 1)];
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      }
      cost += static_cast<int>(seen.size());
    }
    if (best < 0 || cost < best) {
      best = cost;
      best_labels = labels;
    }
    std::size_t pos = labels.size();
    while (pos > 0 && labels[pos - 1] == order) labels[--pos] = 1;
    if (pos == 0) break;
    ++labels[pos - 1];
  }
  return {best < 0 ? 0 : best, best_labels};
}

}  // namespace rota::testing
