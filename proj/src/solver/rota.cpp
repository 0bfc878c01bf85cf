#include <string>

#include "rota/core/errors.hpp"
#include "rota/core/linalg.hpp"
#include "rota/solver/rota.hpp"

namespace rota {

namespace {

// Column-by-column backtracking for a fixed multiplicity ell. Row i of each
// column takes an index with remaining capacity; the partial column must
// stay linearly independent. Columns are kept in nondecreasing
// lexicographic order (any solution can be sorted that way).
class DirectSearch {
 public:
  DirectSearch(const BasisSequence& bases, int ell, std::uint64_t node_budget)
      : bases_(bases), n_(bases.n()), columns_(ell * bases.n()), node_budget_(node_budget) {
    const auto n = static_cast<std::size_t>(n_);
    capacity_.assign(n, std::vector<int>(n + 1, ell));
    grid_.assign(n, std::vector<int>(static_cast<std::size_t>(columns_), 0));
    for (int i = 0; i < n_; ++i) {
      for (int c = 0; c < n_; ++c) vectors_.push_back(bases.vector(i, c));
    }
  }

  bool run() { return start_column(0); }
  bool budget_exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& grid() const { return grid_; }

 private:
  const std::vector<Scalar>& vec(int row, int index) const {
    return vectors_[static_cast<std::size_t>(row * n_ + index - 1)];
  }

  // Rows whose remaining capacity sits on a single index must take that
  // index in every remaining column, so those vectors must be independent.
  bool forced_rows_feasible() const {
    IncrementalIndependence forced(n_);
    for (int i = 0; i < n_; ++i) {
      int only = 0;
      int live = 0;
      for (int c = 1; c <= n_; ++c) {
        if (capacity_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] > 0) {
          ++live;
          only = c;
        }
      }
      if (live == 1 && !forced.try_push(vec(i, only))) return false;
    }
    return true;
  }

  bool start_column(int column) {
    if (column == columns_) return true;
    if (!forced_rows_feasible()) return false;
    IncrementalIndependence partial(n_);
    return fill(column, 0, column > 0, partial);
  }

  bool fill(int column, int row, bool tight, IncrementalIndependence& partial) {
    if (node_budget_ != 0 && ++nodes_ > node_budget_) {
      exhausted_ = true;
      return false;
    }
    if (node_budget_ == 0) ++nodes_;
    const auto r = static_cast<std::size_t>(row);
    const auto col = static_cast<std::size_t>(column);
    const int lowest = tight ? grid_[r][col - 1] : 1;
    for (int c = lowest; c <= n_; ++c) {
      int& cap = capacity_[r][static_cast<std::size_t>(c)];
      if (cap == 0) continue;
      if (!partial.try_push(vec(row, c))) continue;
      --cap;
      grid_[r][col] = c;
      const bool next_tight = tight && c == grid_[r][col - 1];
      const bool ok = row + 1 == n_ ? start_column(column + 1) : fill(column, row + 1, next_tight, partial);
      if (ok) return true;
      ++cap;
      grid_[r][col] = 0;
      partial.pop();
      if (exhausted_) return false;
    }
    return false;
  }

  const BasisSequence& bases_;
  int n_;
  int columns_;
  std::uint64_t node_budget_;
  std::vector<std::vector<int>> capacity_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::vector<Scalar>> vectors_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

RotaResult solve_direct(const BasisSequence& bases, const RotaOptions& options) {
  RotaResult result;
  for (int ell = options.min_ell; ell <= options.max_ell; ++ell) {
    DirectSearch search(bases, ell, options.node_budget);
    const bool found = search.run();
    result.nodes += search.nodes();
    result.budget_exhausted = result.budget_exhausted || search.budget_exhausted();
    if (found) {
      result.ell = ell;
      result.arrangement.emplace(bases.n(), ell * bases.n(), search.grid());
      return result;
    }
  }
  return result;
}

// Looks for one nonzero term of P_{M,pi}(D): the maps J_k of that term,
// written as rows, are the arrangement.
RotaResult solve_invariant(const BasisSequence& bases, const RotaOptions& options) {
  RotaResult result;
  const int n = bases.n();
  const SparseTensor d = SparseTensor::from_dense(determinantal_tensor(bases).tensor());
  for (int ell = options.min_ell; ell <= options.max_ell; ++ell) {
    const int degree = ell * n;
    const auto reps = canonical_block_permutations(degree, n, static_cast<std::size_t>(options.tuple_budget));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n - 1), 0);
    std::uint64_t tried = 0;
    while (tried < options.tuple_budget) {
      PermTuple perms{Permutation::identity(degree)};
      for (std::size_t p : pick) perms.push_back(reps[p]);
      ++tried;
      auto term = find_nonzero_term(d, degree, perms, options.node_budget);
      if (term) {
        result.ell = ell;
        result.arrangement.emplace(n, degree, term->maps);
        result.perms = std::move(perms);
        result.term = std::move(term);
        return result;
      }
      std::size_t level = pick.size();
      while (level > 0 && pick[level - 1] + 1 == reps.size()) pick[--level] = 0;
      if (level == 0) break;
      ++pick[level - 1];
    }
    result.nodes += tried;
    if (tried == options.tuple_budget) result.budget_exhausted = true;
  }
  return result;
}

}  // namespace

RotaStrategy parse_rota_strategy(std::string_view name) {
  if (name == "direct") return RotaStrategy::kDirect;
  if (name == "invariant") return RotaStrategy::kInvariant;
  throw UsageError("unknown rota strategy '" + std::string(name) + "'");
}

RotaResult solve_rota(const BasisSequence& bases, const RotaOptions& options) {
  if (options.min_ell < 1 || options.max_ell < options.min_ell) {
    throw ValidationError("multiplicity range must satisfy 1 <= min ell <= max ell");
  }
  return options.strategy == RotaStrategy::kDirect ? solve_direct(bases, options) : solve_invariant(bases, options);
}

}  // namespace rota
