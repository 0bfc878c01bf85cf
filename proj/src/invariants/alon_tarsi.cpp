#include <string>
#include <vector>

#include "rota/core/errors.hpp"
#include "rota/core/permutation.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

namespace {

// Row-major backtracking over n x n Latin squares on symbols 1..n.
class LatinSquares {
 public:
  explicit LatinSquares(int n)
      : n_(n), cells_(static_cast<std::size_t>(n * n), 0), row_used_(static_cast<std::size_t>(n), 0),
        col_used_(static_cast<std::size_t>(n), 0) {}

  BigInt signed_count() {
    fill(0);
    return even_ - odd_;
  }

 private:
  void fill(int cell) {
    if (cell == n_ * n_) {
      record();
      return;
    }
    const auto r = static_cast<std::size_t>(cell / n_);
    const auto c = static_cast<std::size_t>(cell % n_);
    for (int v = 1; v <= n_; ++v) {
      const unsigned bit = 1u << v;
      if ((row_used_[r] & bit) || (col_used_[c] & bit)) continue;
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      cells_[static_cast<std::size_t>(cell)] = v;
      fill(cell + 1);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
    }
  }

  void record() {
    int sign = 1;
    std::vector<int> line(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) line[static_cast<std::size_t>(c)] = cells_[static_cast<std::size_t>(r * n_ + c)];
      sign *= inversion_parity_sign(line);
    }
    for (int c = 0; c < n_; ++c) {
      for (int r = 0; r < n_; ++r) line[static_cast<std::size_t>(r)] = cells_[static_cast<std::size_t>(r * n_ + c)];
      sign *= inversion_parity_sign(line);
    }
    if (sign > 0) {
      ++even_;
    } else {
      ++odd_;
    }
  }

  int n_;
  std::vector<int> cells_;
  std::vector<unsigned> row_used_;
  std::vector<unsigned> col_used_;
  BigInt even_ = 0;
  BigInt odd_ = 0;
};

}  // namespace

BigInt alon_tarsi_difference(int n, int max_n) {
  if (n < 1) throw ValidationError("Latin square order must be >= 1");
  if (n > max_n) {
    throw ResourceError("Latin square enumeration for n = " + std::to_string(n) + " exceeds the guard n <= " +
                        std::to_string(max_n));
  }
  return LatinSquares(n).signed_count();
}

}  // namespace rota
