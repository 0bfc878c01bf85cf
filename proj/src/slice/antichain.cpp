#include <algorithm>
#include <numeric>
#include <string>

#include "rota/core/errors.hpp"
#include "rota/slice/slice_rank.hpp"

namespace rota {

TotalOrders TotalOrders::natural(int order, int dim) {
  TotalOrders o;
  std::vector<int> ranks(static_cast<std::size_t>(dim));
  std::iota(ranks.begin(), ranks.end(), 1);
  o.ranks.assign(static_cast<std::size_t>(order), ranks);
  return o;
}

void TotalOrders::validate(int order, int dim) const {
  if (static_cast<int>(ranks.size()) != order) {
    throw ValidationError("expected " + std::to_string(order) + " orderings, got " + std::to_string(ranks.size()));
  }
  for (const auto& r : ranks) {
    if (static_cast<int>(r.size()) != dim) throw ValidationError("ordering does not cover [n]");
    std::vector<bool> seen(static_cast<std::size_t>(dim) + 1, false);
    for (int v : r) {
      if (v < 1 || v > dim || seen[static_cast<std::size_t>(v)]) throw ValidationError("ordering is not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

namespace {

bool leq(const Index& a, const Index& b, const TotalOrders& orders) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& r = orders.ranks[j];
    if (r[static_cast<std::size_t>(a[j] - 1)] > r[static_cast<std::size_t>(b[j] - 1)]) return false;
  }
  return true;
}

// Minimum hitting set of the support by (axis, value) pairs: choosing value
// v on axis j pays for every point with x_j = v. A labeling with cost c
// yields a cover of size c and vice versa.
class CoverSearch {
 public:
  CoverSearch(std::vector<Index> points, int order, int dim)
      : points_(std::move(points)), d_(static_cast<std::size_t>(order)), n_(static_cast<std::size_t>(dim)) {
    paid_.assign(d_, std::vector<int>(n_ + 1, 0));
    mark_.assign(d_, std::vector<int>(n_ + 1, 0));
    counts_.assign(d_, std::vector<int>(n_ + 1, 0));
    for (const auto& p : points_) {
      for (std::size_t j = 0; j < d_; ++j) ++counts_[j][static_cast<std::size_t>(p[j])];
    }
    // Most degenerate points first, ties lexicographic (points_ is sorted).
    branch_order_.resize(points_.size());
    std::iota(branch_order_.begin(), branch_order_.end(), 0);
    std::stable_sort(branch_order_.begin(), branch_order_.end(),
                     [&](std::size_t a, std::size_t b) { return degeneracy(a) > degeneracy(b); });
  }

  std::uint64_t nodes() const { return nodes_; }

  // Returns the minimum cover size; `upper` must be achievable.
  int minimum(int lower, int upper) {
    best_ = upper;
    if (lower < best_) branch(0);
    return best_;
  }

  // Lexicographically least labeling of points_ (in their given order)
  // with cost exactly `optimum`.
  std::vector<int> canonical_labels(int optimum) {
    for (auto& row : paid_) std::fill(row.begin(), row.end(), 0);
    labels_.assign(points_.size(), 0);
    optimum_ = optimum;
    if (!label(0, 0)) throw std::logic_error("no labeling attains the computed optimum");
    return labels_;
  }

 private:
  int degeneracy(std::size_t i) const {
    int s = 0;
    for (std::size_t j = 0; j < d_; ++j) s += counts_[j][static_cast<std::size_t>(points_[i][j])];
    return s;
  }

  bool covered(const Index& p) const {
    for (std::size_t j = 0; j < d_; ++j) {
      if (paid_[j][static_cast<std::size_t>(p[j])] > 0) return true;
    }
    return false;
  }

  // Greedy set of uncovered points (from position `from` in points_ order)
  // pairwise differing in every coordinate; each needs its own new value.
  int disjoint_lower_bound(std::size_t from) {
    ++epoch_;
    int size = 0;
    for (std::size_t i = from; i < points_.size(); ++i) {
      const Index& p = points_[i];
      if (covered(p)) continue;
      bool clash = false;
      for (std::size_t j = 0; j < d_ && !clash; ++j) clash = mark_[j][static_cast<std::size_t>(p[j])] == epoch_;
      if (clash) continue;
      for (std::size_t j = 0; j < d_; ++j) mark_[j][static_cast<std::size_t>(p[j])] = epoch_;
      ++size;
    }
    return size;
  }

  void branch(int cost) {
    ++nodes_;
    if (cost + disjoint_lower_bound(0) >= best_) return;
    const Index* target = nullptr;
    for (std::size_t i : branch_order_) {
      if (!covered(points_[i])) {
        target = &points_[i];
        break;
      }
    }
    if (target == nullptr) {
      best_ = cost;
      return;
    }
    // Try the axis whose value is shared by the most uncovered points first.
    std::vector<std::pair<int, std::size_t>> axes;
    for (std::size_t j = 0; j < d_; ++j) {
      int shared = 0;
      for (const auto& p : points_) {
        if (p[j] == (*target)[j] && !covered(p)) ++shared;
      }
      axes.emplace_back(-shared, j);
    }
    std::sort(axes.begin(), axes.end());
    for (const auto& [neg, j] : axes) {
      auto& slot = paid_[j][static_cast<std::size_t>((*target)[j])];
      ++slot;
      branch(cost + 1);
      --slot;
    }
  }

  bool label(std::size_t pos, int cost) {
    ++nodes_;
    if (cost + disjoint_lower_bound(pos) > optimum_) return false;
    if (pos == points_.size()) return true;
    const Index& p = points_[pos];
    for (std::size_t j = 0; j < d_; ++j) {
      auto& slot = paid_[j][static_cast<std::size_t>(p[j])];
      const int extra = slot > 0 ? 0 : 1;
      ++slot;
      labels_[pos] = static_cast<int>(j) + 1;
      if (label(pos + 1, cost + extra)) return true;
      --slot;
    }
    return false;
  }

  std::vector<Index> points_;
  std::size_t d_;
  std::size_t n_;
  std::vector<std::vector<int>> paid_;
  std::vector<std::vector<int>> mark_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::size_t> branch_order_;
  std::vector<int> labels_;
  int epoch_ = 0;
  int best_ = 0;
  int optimum_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_antichain(std::span<const Index> support, const TotalOrders& orders) {
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      if (support[a] == support[b]) continue;
      if (leq(support[a], support[b], orders) || leq(support[b], support[a], orders)) return false;
    }
  }
  return true;
}

bool is_antichain(const SparseTensor& x, const TotalOrders& orders) {
  orders.validate(x.order(), x.dim());
  std::vector<Index> points;
  for (const auto& [idx, v] : x.support()) points.push_back(idx);
  return is_antichain(points, orders);
}

AntichainSliceRank antichain_slice_rank(const SparseTensor& x, const TotalOrders& orders) {
  if (!is_antichain(x, orders)) {
    throw PreconditionError("support is not an antichain under the given orders");
  }
  AntichainSliceRank result;
  if (x.is_zero()) return result;

  std::vector<Index> points;
  for (const auto& [idx, v] : x.support()) points.push_back(idx);

  // Upper bound: put every point in the part of a single axis.
  int upper = static_cast<int>(points.size());
  for (int j = 0; j < x.order(); ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(x.dim()) + 1, false);
    int distinct = 0;
    for (const auto& p : points) {
      auto v = static_cast<std::size_t>(p[static_cast<std::size_t>(j)]);
      if (!seen[v]) ++distinct;
      seen[v] = true;
    }
    upper = std::min(upper, distinct);
  }
  const int lower = diagonal_lower_bound(x).bound();

  CoverSearch search(points, x.order(), x.dim());
  result.value = search.minimum(lower, upper);
  const auto labels = search.canonical_labels(result.value);
  for (std::size_t i = 0; i < points.size(); ++i) result.partition.emplace_back(points[i], labels[i]);
  result.search_nodes = search.nodes();
  return result;
}

}  // namespace rota
