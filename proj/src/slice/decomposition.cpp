#include <string>

#include "rota/core/errors.hpp"
#include "rota/slice/slice_rank.hpp"

namespace rota {

SliceDecomposition trivial_decomposition(const DenseTensor& x) {
  SliceDecomposition dec{x.order(), x.dim(), {}};
  const std::size_t n = static_cast<std::size_t>(x.dim());
  const std::size_t slice = x.size() / n;
  for (std::size_t l = 0; l < n; ++l) {
    SliceTerm term;
    term.axis = 1;
    term.residual.assign(x.entries().begin() + static_cast<std::ptrdiff_t>(l * slice),
                         x.entries().begin() + static_cast<std::ptrdiff_t>((l + 1) * slice));
    bool nonzero = false;
    for (const auto& v : term.residual) nonzero = nonzero || !is_zero(v);
    if (!nonzero) continue;
    term.vector.assign(n, Scalar(0));
    term.vector[l] = 1;
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

SliceDecomposition trivial_decomposition(const SparseTensor& x) { return trivial_decomposition(x.to_dense()); }

bool verify_slice_decomposition(const DenseTensor& x, const SliceDecomposition& dec) {
  if (dec.order != x.order() || dec.dim != x.dim()) throw ValidationError("decomposition shape does not match tensor");
  const int d = x.order();
  const std::size_t n = static_cast<std::size_t>(x.dim());
  const std::size_t slice = x.size() / n;
  DenseTensor sum(d, x.dim());
  for (const auto& term : dec.terms) {
    if (term.axis < 1 || term.axis > d) {
      throw ValidationError("slice axis " + std::to_string(term.axis) + " outside [1, " + std::to_string(d) + "]");
    }
    if (term.vector.size() != n || term.residual.size() != slice) {
      throw ValidationError("slice term has wrong vector or residual size");
    }
    for (std::size_t off = 0; off < sum.size(); ++off) {
      const Index idx = sum.index_of(off);
      const auto axis = static_cast<std::size_t>(term.axis - 1);
      const Scalar& v = term.vector[static_cast<std::size_t>(idx[axis] - 1)];
      if (is_zero(v)) continue;
      std::size_t roff = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k != axis) roff = roff * n + static_cast<std::size_t>(idx[k] - 1);
      }
      sum[off] += v * term.residual[roff];
    }
  }
  return sum == x;
}

bool verify_slice_decomposition(const SparseTensor& x, const SliceDecomposition& dec) {
  return verify_slice_decomposition(x.to_dense(), dec);
}

}  // namespace rota
