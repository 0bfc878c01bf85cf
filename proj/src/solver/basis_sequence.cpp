#include <string>

#include "rota/core/errors.hpp"
#include "rota/core/linalg.hpp"
#include "rota/solver/rota.hpp"

namespace rota {

BasisSequence::BasisSequence(std::vector<Matrix> bases) : bases_(std::move(bases)) {
  const int n = static_cast<int>(bases_.size());
  if (n < 1) throw ValidationError("a basis sequence needs at least one basis");
  for (int i = 0; i < n; ++i) {
    const Matrix& b = bases_[static_cast<std::size_t>(i)];
    if (b.rows() != n || b.cols() != n) {
      throw ValidationError("basis " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (is_zero(determinant(b))) throw ValidationError("basis " + std::to_string(i + 1) + " is singular");
  }
}

BasisSequence BasisSequence::identities(int n) {
  if (n < 1) throw ValidationError("a basis sequence needs n >= 1");
  return BasisSequence(std::vector<Matrix>(static_cast<std::size_t>(n), Matrix::identity(n)));
}

ArrangementMatrix::ArrangementMatrix(int n, int columns, std::vector<std::vector<int>> grid)
    : n_(n), columns_(columns), grid_(std::move(grid)) {
  if (n < 1 || columns < 1) throw ValidationError("arrangement needs n >= 1 and M >= 1");
  if (static_cast<int>(grid_.size()) != n) throw ValidationError("arrangement grid must have n rows");
  for (const auto& row : grid_) {
    if (static_cast<int>(row.size()) != columns) throw ValidationError("arrangement rows must have M entries");
    for (int c : row) {
      if (c < 1 || c > n) throw ValidationError("arrangement entry " + std::to_string(c) + " outside [1, n]");
    }
  }
}

std::vector<std::vector<Scalar>> ArrangementMatrix::resolve_column(const BasisSequence& bases, int column) const {
  std::vector<std::vector<Scalar>> vectors;
  for (int i = 0; i < n_; ++i) vectors.push_back(bases.vector(i, at(i, column) - 1));
  return vectors;
}

ArrangementMatrix ArrangementMatrix::permute_columns(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != columns_) throw ValidationError("column order has wrong length");
  std::vector<std::vector<int>> grid(grid_.size(), std::vector<int>(order.size()));
  for (std::size_t r = 0; r < grid_.size(); ++r) {
    for (std::size_t j = 0; j < order.size(); ++j) grid[r][j] = grid_[r][static_cast<std::size_t>(order[j])];
  }
  return ArrangementMatrix(n_, columns_, std::move(grid));
}

ArrangementReport verify_arrangement(const BasisSequence& bases, const ArrangementMatrix& a) {
  if (a.n() != bases.n()) throw ValidationError("arrangement n does not match the number of bases");
  ArrangementReport report;
  const int n = a.n();
  if (a.columns() % n != 0) {
    report.diagnostic = "M = " + std::to_string(a.columns()) + " is not divisible by n = " + std::to_string(n);
    return report;
  }
  const int ell = a.columns() / n;
  for (int i = 0; i < n; ++i) {
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j < a.columns(); ++j) ++count[static_cast<std::size_t>(a.at(i, j))];
    for (int c = 1; c <= n; ++c) {
      if (count[static_cast<std::size_t>(c)] != ell) {
        report.failing_row = i + 1;
        report.diagnostic = "row " + std::to_string(i + 1) + " uses index " + std::to_string(c) + " " +
                            std::to_string(count[static_cast<std::size_t>(c)]) + " times, expected " +
                            std::to_string(ell);
        return report;
      }
    }
  }
  for (int j = 0; j < a.columns(); ++j) {
    const auto vectors = a.resolve_column(bases, j);
    if (is_zero(determinant_of_columns(vectors))) {
      report.failing_column = j + 1;
      report.diagnostic = "column " + std::to_string(j + 1) + " is not a basis (determinant 0)";
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace rota
