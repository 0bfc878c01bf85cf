#pragma once

#include <span>
#include <vector>

#include "rota/core/matrix.hpp"
#include "rota/core/scalar.hpp"

namespace rota {

/// Exact determinant: rows are lifted to integers by their denominator lcm,
/// then Bareiss fraction-free elimination runs over Z.
/// Throws ValidationError for non-square input.
Scalar determinant(const Matrix& m);

/// Determinant of the matrix whose columns are the given vectors.
Scalar determinant_of_columns(std::span<const std::vector<Scalar>> columns);

/// Exact rank over Q (fraction-free elimination on the integer lift).
int matrix_rank(const Matrix& m);

/// Maintains a row-echelon basis of a growing list of vectors so that
/// linear independence of one more vector is decided in O(k n) operations.
class IncrementalIndependence {
 public:
  explicit IncrementalIndependence(int dim) : dim_(dim) {}

  /// Adds v and returns true when v is independent of the current set;
  /// returns false (leaving the set unchanged) otherwise.
  bool try_push(std::span<const Scalar> v);
  void pop();
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    std::vector<Scalar> values;  // reduced against earlier rows
    int pivot;
  };
  int dim_;
  std::vector<Row> rows_;
};

}  // namespace rota
