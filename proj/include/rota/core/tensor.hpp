#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "rota/core/matrix.hpp"
#include "rota/core/scalar.hpp"

namespace rota {

/// A d-tuple of 1-based coordinates in [n].
using Index = std::vector<int>;

/// Order-d, dimension-n tensor T : [n]^d -> Q stored row-major over 1-based
/// indices (the last coordinate varies fastest).
class DenseTensor {
 public:
  /// Zero tensor. Throws ValidationError for order < 1, dim < 1 or a layout
  /// that does not fit in memory addressing.
  DenseTensor(int order, int dim);
  DenseTensor(int order, int dim, std::vector<Scalar> entries);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  std::size_t offset(std::span<const int> index) const;
  Index index_of(std::size_t offset) const;

  const Scalar& at(std::span<const int> index) const { return entries_[offset(index)]; }
  void set(std::span<const int> index, Scalar value) { entries_[offset(index)] = std::move(value); }

  const Scalar& operator[](std::size_t off) const { return entries_[off]; }
  Scalar& operator[](std::size_t off) { return entries_[off]; }

  std::span<const Scalar> entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(const DenseTensor& a, const DenseTensor& b);
  friend DenseTensor operator+(const DenseTensor& a, const DenseTensor& b);

 private:
  int order_;
  int dim_;
  std::vector<Scalar> entries_;
};

/// Same tensor keeping only the nonzero entries; iteration order is the
/// lexicographic order of the indices.
class SparseTensor {
 public:
  SparseTensor(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Stores value at index (erasing it when zero). Validates the index.
  void set(Index index, Scalar value);
  Scalar get(std::span<const int> index) const;

  const std::map<Index, Scalar>& support() const { return support_; }
  std::size_t nnz() const { return support_.size(); }
  bool is_zero() const { return support_.empty(); }

  DenseTensor to_dense() const;
  static SparseTensor from_dense(const DenseTensor& dense);

  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

 private:
  int order_;
  int dim_;
  std::map<Index, Scalar> support_;
};

void validate_index(std::span<const int> index, int order, int dim);

/// (A_1, ..., A_d) · X: Y(i) = sum_j A_1(i_1, j_1) ... A_d(i_d, j_d) X(j),
/// computed as d successive single-mode contractions.
DenseTensor multilinear_product(std::span<const Matrix> mats, const DenseTensor& x);
DenseTensor multilinear_product(std::span<const Matrix> mats, const SparseTensor& x);

/// X ⊗ Y with coordinate pairs (i, j) ordered lexicographically:
/// k = (i - 1) * m + j, where m = dim(Y).
DenseTensor tensor_product(const DenseTensor& x, const DenseTensor& y);
SparseTensor tensor_product(const SparseTensor& x, const SparseTensor& y);

/// Left-associated X ⊗ ... ⊗ X (k factors). Throws ValidationError for k < 1.
DenseTensor tensor_power(const DenseTensor& x, int k);
SparseTensor tensor_power(const SparseTensor& x, int k);

}  // namespace rota
