#include <algorithm>
#include <string>
#include <utility>

#include "rota/core/errors.hpp"
#include "rota/core/linalg.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

namespace {

void validate_shape(int order, int dim, int degree, std::span<const Permutation> perms) {
  if (degree < 1 || degree % dim != 0) {
    throw ValidationError("degree M = " + std::to_string(degree) + " must be a positive multiple of n = " +
                          std::to_string(dim));
  }
  if (dim > 30) throw ValidationError("invariant evaluation supports n <= 30");
  if (static_cast<int>(perms.size()) != order) {
    throw ValidationError("expected " + std::to_string(order) + " permutations, got " + std::to_string(perms.size()));
  }
  for (const auto& p : perms) {
    if (p.size() != degree) throw ValidationError("permutation degree does not match M");
  }
}

void check_guard(int order, int dim, int degree, std::uint64_t max_terms) {
  if (max_terms == 0) return;
  const BigInt count = admissible_term_count(order, dim, degree);
  if (count > BigInt(std::to_string(max_terms))) {
    throw ResourceError("invariant has " + count.get_str() + " admissible terms, above the guard of " +
                        std::to_string(max_terms));
  }
}

// Where position i of J_k lands in K_k = J_k ∘ pi_k: block and offset of
// pi_k^{-1}(i).
struct Layout {
  int order;
  int dim;
  int degree;
  int blocks;
  std::vector<int> block;   // [k * degree + i]
  std::vector<int> offset;  // [k * degree + i]

  Layout(int d, int n, int m, std::span<const Permutation> perms) : order(d), dim(n), degree(m), blocks(m / n) {
    block.resize(static_cast<std::size_t>(d * m));
    offset.resize(block.size());
    for (int k = 0; k < d; ++k) {
      const Permutation inv = perms[static_cast<std::size_t>(k)].inverse();
      for (int i = 0; i < m; ++i) {
        const int p = inv(i + 1) - 1;
        block[static_cast<std::size_t>(k * m + i)] = p / n;
        offset[static_cast<std::size_t>(k * m + i)] = p % n;
      }
    }
  }
};

struct SupportPoint {
  Index index;
  Scalar value;
};

std::vector<SupportPoint> support_points(const SparseTensor& x) {
  std::vector<SupportPoint> pts;
  pts.reserve(x.nnz());
  for (const auto& [idx, v] : x.support()) pts.push_back({idx, v});
  return pts;
}

// Depth-first enumeration over positions i = 1..M, choosing the support
// point (J_1(i), ..., J_d(i)) at each step subject to every K_k staying a
// block-wise injection. Block-permutation parity is tracked incrementally.
class SupportDfs {
 public:
  SupportDfs(const std::vector<SupportPoint>& points, const Layout& layout) : points_(points), layout_(layout) {
    const auto cells = static_cast<std::size_t>(layout.order * layout.blocks);
    used_.assign(cells, 0u);
    placed_.assign(cells * static_cast<std::size_t>(layout.dim), 0);
    products_.resize(static_cast<std::size_t>(layout.degree) + 1);
    products_[0] = 1;
    choice_.assign(static_cast<std::size_t>(layout.degree), 0);
  }

  // Restricts the choice at position 1 to points first, first + stride, ...
  void split_first_level(std::size_t first, std::size_t stride) {
    first_ = first;
    stride_ = stride;
  }
  void set_node_budget(std::uint64_t max_nodes) { max_nodes_ = max_nodes; }
  std::uint64_t nodes() const { return nodes_; }

  // visit(sign, value, choices) returns false to stop the enumeration.
  // Returns false when stopped by the visitor or the node budget.
  template <class Visit>
  bool run(Visit& visit) {
    return step(0, false, visit);
  }

 private:
  template <class Visit>
  bool step(std::size_t pos, bool parity, Visit& visit) {
    ++nodes_;
    if (max_nodes_ != 0 && nodes_ > max_nodes_) return false;
    if (pos == static_cast<std::size_t>(layout_.degree)) return visit(parity ? -1 : 1, products_[pos], choice_);
    const std::size_t begin = pos == 0 ? first_ : 0;
    const std::size_t stride = pos == 0 ? stride_ : 1;
    for (std::size_t c = begin; c < points_.size(); c += stride) {
      const SupportPoint& p = points_[c];
      if (!fits(pos, p.index)) continue;
      const bool flip = place(pos, p.index);
      products_[pos + 1] = products_[pos] * p.value;
      choice_[pos] = c;
      const bool go_on = step(pos + 1, parity != flip, visit);
      unplace(pos, p.index);
      if (!go_on) return false;
    }
    return true;
  }

  std::size_t cell_of(int k, std::size_t pos) const {
    const auto slot = static_cast<std::size_t>(k * layout_.degree) + pos;
    return static_cast<std::size_t>(k * layout_.blocks + layout_.block[slot]);
  }

  std::size_t offset_of(int k, std::size_t pos) const {
    return static_cast<std::size_t>(layout_.offset[static_cast<std::size_t>(k * layout_.degree) + pos]);
  }

  bool fits(std::size_t pos, const Index& idx) const {
    for (int k = 0; k < layout_.order; ++k) {
      if (used_[cell_of(k, pos)] & (1u << idx[static_cast<std::size_t>(k)])) return false;
    }
    return true;
  }

  // Returns whether placing idx at pos flips the parity of prod_k eps(K_k).
  bool place(std::size_t pos, const Index& idx) {
    bool flip = false;
    const auto n = static_cast<std::size_t>(layout_.dim);
    for (int k = 0; k < layout_.order; ++k) {
      const std::size_t cell = cell_of(k, pos);
      const std::size_t off = offset_of(k, pos);
      const int v = idx[static_cast<std::size_t>(k)];
      int* row = &placed_[cell * n];
      for (std::size_t o = 0; o < n; ++o) {
        const int w = row[o];
        if (w != 0 && ((o < off && w > v) || (o > off && w < v))) flip = !flip;
      }
      row[off] = v;
      used_[cell] |= 1u << v;
    }
    return flip;
  }

  void unplace(std::size_t pos, const Index& idx) {
    const auto n = static_cast<std::size_t>(layout_.dim);
    for (int k = 0; k < layout_.order; ++k) {
      const std::size_t cell = cell_of(k, pos);
      placed_[cell * n + offset_of(k, pos)] = 0;
      used_[cell] &= ~(1u << idx[static_cast<std::size_t>(k)]);
    }
  }

  const std::vector<SupportPoint>& points_;
  const Layout& layout_;
  std::vector<unsigned> used_;
  std::vector<int> placed_;
  std::vector<Scalar> products_;
  std::vector<std::size_t> choice_;
  std::size_t first_ = 0;
  std::size_t stride_ = 1;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_ = 0;
};

struct PartialSum {
  Scalar value = 0;
  std::uint64_t terms = 0;
  std::uint64_t nonzero = 0;
};

InvariantResult combine(const std::vector<PartialSum>& partial) {
  // Worker-index order; exact arithmetic makes the order immaterial to the
  // value but it is fixed anyway.
  InvariantResult r;
  r.value = 0;
  for (const auto& p : partial) {
    r.value += p.value;
    r.terms_visited += p.terms;
    r.nonzero_terms += p.nonzero;
  }
  return r;
}

unsigned worker_count(const ExecOptions& exec, std::size_t first_level) {
  const unsigned threads = resolve_threads(exec.threads);
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, first_level)));
}

InvariantResult evaluate_support_pruned(const SparseTensor& x, int degree, std::span<const Permutation> perms,
                                        const ExecOptions& exec) {
  const Layout layout(x.order(), x.dim(), degree, perms);
  const auto points = support_points(x);
  const unsigned workers = worker_count(exec, points.size());
  std::vector<PartialSum> partial(workers);
  run_workers(workers, [&](unsigned w) {
    SupportDfs dfs(points, layout);
    dfs.split_first_level(w, workers);
    PartialSum& acc = partial[w];
    auto visit = [&acc](int sign, const Scalar& product, const std::vector<std::size_t>&) {
      if (sign > 0) {
        acc.value += product;
      } else {
        acc.value -= product;
      }
      ++acc.terms;
      ++acc.nonzero;
      return true;
    };
    dfs.run(visit);
  });
  return combine(partial);
}

// J_k for every admissible K_k (a permutation on each n-block), with the
// sign eps(K_k).
struct AdmissibleMap {
  std::vector<int> map;
  int sign;
};

std::vector<AdmissibleMap> admissible_maps(int n, int degree, const Permutation& pi) {
  const auto block_perms = all_permutations(n);
  const int blocks = degree / n;
  const Permutation inv = pi.inverse();
  std::vector<std::size_t> pick(static_cast<std::size_t>(blocks), 0);
  std::vector<AdmissibleMap> out;
  std::vector<int> k_map(static_cast<std::size_t>(degree));
  while (true) {
    int sign = 1;
    for (int b = 0; b < blocks; ++b) {
      const Permutation& p = block_perms[pick[static_cast<std::size_t>(b)]];
      sign *= p.sign();
      for (int o = 0; o < n; ++o) k_map[static_cast<std::size_t>(b * n + o)] = p(o + 1);
    }
    std::vector<int> j_map(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) j_map[static_cast<std::size_t>(i)] = k_map[static_cast<std::size_t>(inv(i + 1) - 1)];
    out.push_back({std::move(j_map), sign});
    int b = blocks - 1;
    while (b >= 0 && pick[static_cast<std::size_t>(b)] + 1 == block_perms.size()) pick[static_cast<std::size_t>(b--)] = 0;
    if (b < 0) break;
    ++pick[static_cast<std::size_t>(b)];
  }
  return out;
}

InvariantResult evaluate_admissible_maps(const DenseTensor& x, int degree, std::span<const Permutation> perms,
                                         const ExecOptions& exec) {
  const int d = x.order();
  const int n = x.dim();
  std::vector<std::vector<AdmissibleMap>> lists;
  for (const auto& pi : perms) lists.push_back(admissible_maps(n, degree, pi));
  std::vector<std::size_t> stride(static_cast<std::size_t>(d), 1);
  for (int k = d - 2; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] = stride[static_cast<std::size_t>(k + 1)] * static_cast<std::size_t>(n);
  }
  const auto m = static_cast<std::size_t>(degree);
  const unsigned workers = worker_count(exec, lists[0].size());
  std::vector<PartialSum> partial(workers);

  run_workers(workers, [&](unsigned w) {
    PartialSum& acc = partial[w];
    // offsets[k][i]: flat offset of (J_1(i), ..., J_k(i), 1, ..., 1).
    std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(d), std::vector<std::size_t>(m, 0));
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    Scalar product;

    const auto apply = [&](std::size_t k) {
      const auto& map = lists[k][pick[k]].map;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t base = k == 0 ? 0 : offsets[k - 1][i];
        offsets[k][i] = base + static_cast<std::size_t>(map[i] - 1) * stride[k];
      }
    };
    const auto leaf = [&] {
      ++acc.terms;
      const auto& last = offsets[static_cast<std::size_t>(d - 1)];
      product = 1;
      for (std::size_t i = 0; i < m; ++i) {
        const Scalar& v = x[last[i]];
        if (is_zero(v)) return;
        product *= v;
      }
      int sign = 1;
      for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) sign *= lists[k][pick[k]].sign;
      if (sign > 0) {
        acc.value += product;
      } else {
        acc.value -= product;
      }
      ++acc.nonzero;
    };

    // Odometer over (K_2, ..., K_d) for each of this worker's K_1 choices.
    for (std::size_t first = w; first < lists[0].size(); first += workers) {
      pick[0] = first;
      apply(0);
      std::size_t level = 1;
      if (d == 1) {
        leaf();
        continue;
      }
      for (std::size_t k = 1; k < static_cast<std::size_t>(d); ++k) {
        pick[k] = 0;
        apply(k);
      }
      while (true) {
        leaf();
        level = static_cast<std::size_t>(d - 1);
        while (level >= 1 && pick[level] + 1 == lists[level].size()) --level;
        if (level == 0) break;
        ++pick[level];
        apply(level);
        for (std::size_t k = level + 1; k < static_cast<std::size_t>(d); ++k) {
          pick[k] = 0;
          apply(k);
        }
      }
    }
  });
  return combine(partial);
}

}  // namespace

BigInt admissible_term_count(int order, int dim, int degree) {
  BigInt fact = 1;
  for (int i = 2; i <= dim; ++i) fact *= i;
  BigInt per_map;
  mpz_pow_ui(per_map.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(degree / dim));
  BigInt total;
  mpz_pow_ui(total.get_mpz_t(), per_map.get_mpz_t(), static_cast<unsigned long>(order));
  return total;
}

InvariantResult evaluate_invariant(const SparseTensor& x, int degree, std::span<const Permutation> perms,
                                   const InvariantOptions& options) {
  validate_shape(x.order(), x.dim(), degree, perms);
  check_guard(x.order(), x.dim(), degree, options.max_terms);
  if (options.mode == EnumerationMode::kAdmissibleMaps) {
    return evaluate_admissible_maps(x.to_dense(), degree, perms, options.exec);
  }
  return evaluate_support_pruned(x, degree, perms, options.exec);
}

InvariantResult evaluate_invariant(const DenseTensor& x, int degree, std::span<const Permutation> perms,
                                   const InvariantOptions& options) {
  validate_shape(x.order(), x.dim(), degree, perms);
  check_guard(x.order(), x.dim(), degree, options.max_terms);
  if (options.mode == EnumerationMode::kAdmissibleMaps) {
    return evaluate_admissible_maps(x, degree, perms, options.exec);
  }
  return evaluate_support_pruned(SparseTensor::from_dense(x), degree, perms, options.exec);
}

std::optional<InvariantTerm> find_nonzero_term(const SparseTensor& x, int degree, std::span<const Permutation> perms,
                                               std::uint64_t max_nodes) {
  validate_shape(x.order(), x.dim(), degree, perms);
  const Layout layout(x.order(), x.dim(), degree, perms);
  const auto points = support_points(x);
  SupportDfs dfs(points, layout);
  dfs.set_node_budget(max_nodes);
  std::optional<InvariantTerm> found;
  auto visit = [&](int sign, const Scalar& product, const std::vector<std::size_t>& choices) {
    InvariantTerm term;
    term.sign = sign;
    term.value = sign > 0 ? product : Scalar(-product);
    term.maps.assign(static_cast<std::size_t>(x.order()), std::vector<int>(static_cast<std::size_t>(degree)));
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const Index& idx = points[choices[i]].index;
      for (std::size_t k = 0; k < idx.size(); ++k) term.maps[k][i] = idx[k];
    }
    found = std::move(term);
    return false;
  };
  dfs.run(visit);
  return found;
}

RelativeInvarianceReport check_relative_invariance(const SparseTensor& x, std::span<const Matrix> mats, int degree,
                                                   std::span<const Permutation> perms,
                                                   const InvariantOptions& options) {
  validate_shape(x.order(), x.dim(), degree, perms);
  Scalar factor = 1;
  for (const auto& a : mats) {
    if (!a.is_square() || a.rows() != x.dim()) throw ValidationError("matrix dimension does not match tensor dimension");
    const Scalar det = determinant(a);
    if (is_zero(det)) throw ValidationError("relative invariance needs invertible matrices");
    for (int e = 0; e < degree / x.dim(); ++e) factor *= det;
  }
  const DenseTensor moved = multilinear_product(mats, x);
  RelativeInvarianceReport report;
  report.lhs = evaluate_invariant(moved, degree, perms, options).value;
  report.rhs = evaluate_invariant(x, degree, perms, options).value * factor;
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace rota
