#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rota/core/scalar.hpp"
#include "rota/core/tensor.hpp"

namespace rota {

/// d total orderings of [n]. ranks[j][v - 1] is the rank (1..n) of element v
/// under the j-th ordering. For a tensor power with lexicographically paired
/// coordinates, the lexicographic order on [n]^k is the natural order on
/// [n^k], so natural() covers that case.
struct TotalOrders {
  std::vector<std::vector<int>> ranks;

  static TotalOrders natural(int order, int dim);
  /// Throws ValidationError unless there are `order` bijections [dim] -> [dim].
  void validate(int order, int dim) const;
};

/// One slice-rank-1 summand: v(i_axis) * residual(remaining coordinates).
/// residual holds n^(d-1) entries row-major over the remaining coordinates
/// in their original order (a single entry when d == 1).
struct SliceTerm {
  int axis = 1;  // 1-based
  std::vector<Scalar> vector;
  std::vector<Scalar> residual;
};

struct SliceDecomposition {
  int order = 0;
  int dim = 0;
  std::vector<SliceTerm> terms;
};

/// Support point -> part label in [d], listed in lexicographic index order.
using SupportPartition = std::vector<std::pair<Index, int>>;

struct DiagonalCertificate {
  std::vector<Index> points;
  int bound() const { return static_cast<int>(points.size()); }
};

struct AntichainSliceRank {
  int value = 0;
  SupportPartition partition;
  std::uint64_t search_nodes = 0;
};

/// X(i) = sum_l delta(i_1, l) X(l, i_2, ..., i_d); only nonzero slices are
/// emitted, so the zero tensor gets an empty decomposition.
SliceDecomposition trivial_decomposition(const DenseTensor& x);
SliceDecomposition trivial_decomposition(const SparseTensor& x);

/// True iff the expanded terms sum exactly to x. Throws ValidationError on
/// shape mismatches or an axis outside [1, d].
bool verify_slice_decomposition(const DenseTensor& x, const SliceDecomposition& dec);
bool verify_slice_decomposition(const SparseTensor& x, const SliceDecomposition& dec);

/// No two distinct points are comparable in the product of the given orders.
bool is_antichain(std::span<const Index> support, const TotalOrders& orders);
bool is_antichain(const SparseTensor& x, const TotalOrders& orders);

/// Exact min over partitions of the support of sum_j |pi_j(Gamma_j)|, which
/// is the slice rank when the support is an antichain. The returned
/// partition is the lexicographically least optimal labeling.
/// Throws PreconditionError when the support is not an antichain.
AntichainSliceRank antichain_slice_rank(const SparseTensor& x, const TotalOrders& orders);

/// Adds 1 to every entry, wrapping n to 1.
std::vector<int> cyclic_shift(std::span<const int> tuple, int n);

/// S = {(i, rho i, ..., rho^(n-1) i) : i in [n]^k} as indices of E_n^(⊗k)
/// (each k-tuple flattened to its lexicographic position in [n^k]).
DiagonalCertificate diagonal_certificate_for_power(int n, int k);

/// A subset of the support whose points pairwise differ in every coordinate.
/// Exact maximum for supports up to kExactDiagonalLimit points, greedy in
/// lexicographic order beyond that.
DiagonalCertificate diagonal_lower_bound(const SparseTensor& x);
inline constexpr std::size_t kExactDiagonalLimit = 64;

/// Every point lies in the support of x and all pairs differ everywhere.
bool verify_diagonal_certificate(const SparseTensor& x, const DiagonalCertificate& cert);

}  // namespace rota
