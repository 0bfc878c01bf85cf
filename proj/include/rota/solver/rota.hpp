#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rota/core/matrix.hpp"
#include "rota/core/tensor.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

/// n invertible n x n rational matrices; the columns of basis i form the
/// i-th basis of Q^n. Bases may coincide.
class BasisSequence {
 public:
  /// Throws ValidationError unless there are exactly n square n x n
  /// matrices, each with nonzero determinant.
  explicit BasisSequence(std::vector<Matrix> bases);

  static BasisSequence identities(int n);

  int n() const { return static_cast<int>(bases_.size()); }
  const std::vector<Matrix>& bases() const { return bases_; }
  const Matrix& basis(int i) const { return bases_[static_cast<std::size_t>(i)]; }
  /// Column `column` (0-based) of basis `basis` (0-based).
  std::vector<Scalar> vector(int basis, int column) const { return bases_[static_cast<std::size_t>(basis)].column(column); }

 private:
  std::vector<Matrix> bases_;
};

/// D(i_1, ..., i_n) = det(B_1[i_1], ..., B_n[i_n]).
class DeterminantalTensor {
 public:
  explicit DeterminantalTensor(const BasisSequence& bases);

  const DenseTensor& tensor() const { return tensor_; }
  const BasisSequence& bases() const { return bases_; }
  /// Recomputes one entry from the bases and compares.
  bool spot_check(std::span<const int> index) const;

 private:
  BasisSequence bases_;
  DenseTensor tensor_;
};

DeterminantalTensor determinantal_tensor(const BasisSequence& bases);
/// Same entries for arbitrary (possibly singular) n x n matrices.
DenseTensor determinantal_tensor(std::span<const Matrix> mats);

/// n x M grid of 1-based column references: cell (i, j) names B_i[c_ij].
class ArrangementMatrix {
 public:
  /// Throws ValidationError unless grid has n rows of M >= 1 entries in [n].
  ArrangementMatrix(int n, int columns, std::vector<std::vector<int>> grid);

  int n() const { return n_; }
  int columns() const { return columns_; }
  /// M / n, or 0 when n does not divide M.
  int multiplicity() const { return columns_ % n_ == 0 ? columns_ / n_ : 0; }
  int at(int row, int column) const { return grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)]; }
  const std::vector<std::vector<int>>& grid() const { return grid_; }

  /// The n resolved vectors of one column.
  std::vector<std::vector<Scalar>> resolve_column(const BasisSequence& bases, int column) const;
  /// Column j of the result is column order[j] (0-based) of this grid.
  ArrangementMatrix permute_columns(std::span<const int> order) const;

  friend bool operator==(const ArrangementMatrix&, const ArrangementMatrix&) = default;

 private:
  int n_;
  int columns_;
  std::vector<std::vector<int>> grid_;
};

struct ArrangementReport {
  bool ok = false;
  std::string diagnostic;  // empty when ok
  std::optional<int> failing_row;     // 1-based
  std::optional<int> failing_column;  // 1-based
};

/// Row i uses every index of [n] exactly M/n times and every column's
/// vectors have nonzero determinant. Throws ValidationError when the grid's
/// n differs from the basis count.
ArrangementReport verify_arrangement(const BasisSequence& bases, const ArrangementMatrix& arrangement);

enum class RotaStrategy { kDirect, kInvariant };
/// "direct" or "invariant"; throws UsageError otherwise.
RotaStrategy parse_rota_strategy(std::string_view name);

struct RotaOptions {
  RotaStrategy strategy = RotaStrategy::kDirect;
  int min_ell = 1;
  int max_ell = 2;
  /// Search-node budget per multiplicity (0 = unlimited).
  std::uint64_t node_budget = 0;
  /// Invariant strategy: permutation tuples tried per multiplicity.
  std::uint64_t tuple_budget = 10000;
};

struct RotaResult {
  std::optional<ArrangementMatrix> arrangement;
  int ell = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  /// Invariant strategy: the permutation tuple and term behind the grid.
  std::optional<PermTuple> perms;
  std::optional<InvariantTerm> term;
};

/// Searches ell = min_ell, ..., max_ell for an arrangement. An empty
/// `arrangement` means not found within the limits. Throws ValidationError
/// unless 1 <= min_ell <= max_ell.
RotaResult solve_rota(const BasisSequence& bases, const RotaOptions& options);

/// D(A_1 B_1, ..., A_n B_n) == (B_1^T, ..., B_n^T) · D(A_1, ..., A_n).
bool check_determinantal_base_change(std::span<const Matrix> a, std::span<const Matrix> b);

/// D(B_1, ..., B_n) == (B_1^T, ..., B_n^T) · E_n.
bool check_determinantal_factorisation(const BasisSequence& bases);

}  // namespace rota
