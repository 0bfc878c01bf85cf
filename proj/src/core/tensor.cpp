#include "rota/core/tensor.hpp"

#include <string>

#include "rota/core/errors.hpp"

namespace rota {

namespace {

// Dense layouts above this many entries are refused.
constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

std::size_t checked_size(int order, int dim) {
  if (order < 1) throw ValidationError("tensor order must be >= 1");
  if (dim < 1) throw ValidationError("tensor dimension must be >= 1");
  std::size_t size = 1;
  for (int k = 0; k < order; ++k) {
    if (size > kMaxDenseEntries / static_cast<std::size_t>(dim)) {
      throw ResourceError("dense tensor of order " + std::to_string(order) + " and dimension " + std::to_string(dim) +
                          " exceeds the dense size guard");
    }
    size *= static_cast<std::size_t>(dim);
  }
  return size;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

void validate_index(std::span<const int> index, int order, int dim) {
  if (static_cast<int>(index.size()) != order) {
    throw ValidationError("index has " + std::to_string(index.size()) + " coordinates, expected " + std::to_string(order));
  }
  for (int c : index) {
    if (c < 1 || c > dim) {
      throw ValidationError("index coordinate " + std::to_string(c) + " outside [1, " + std::to_string(dim) + "]");
    }
  }
}

DenseTensor::DenseTensor(int order, int dim)
    : order_(order), dim_(dim), entries_(checked_size(order, dim), Scalar(0)) {}

DenseTensor::DenseTensor(int order, int dim, std::vector<Scalar> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != checked_size(order, dim)) throw ValidationError("entry count must equal dim^order");
}

std::size_t DenseTensor::offset(std::span<const int> index) const {
  validate_index(index, order_, dim_);
  std::size_t off = 0;
  for (int c : index) off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c - 1);
  return off;
}

Index DenseTensor::index_of(std::size_t off) const {
  Index idx(static_cast<std::size_t>(order_));
  for (int k = order_ - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(off % static_cast<std::size_t>(dim_)) + 1;
    off /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool DenseTensor::is_zero() const {
  for (const auto& v : entries_) {
    if (!rota::is_zero(v)) return false;
  }
  return true;
}

bool operator==(const DenseTensor& a, const DenseTensor& b) {
  return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) {
  if (a.order_ != b.order_ || a.dim_ != b.dim_) throw ValidationError("adding tensors of different shape");
  DenseTensor c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

SparseTensor::SparseTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 1) throw ValidationError("tensor order must be >= 1");
  if (dim < 1) throw ValidationError("tensor dimension must be >= 1");
}

void SparseTensor::set(Index index, Scalar value) {
  validate_index(index, order_, dim_);
  if (rota::is_zero(value)) {
    support_.erase(index);
  } else {
    support_[std::move(index)] = std::move(value);
  }
}

Scalar SparseTensor::get(std::span<const int> index) const {
  validate_index(index, order_, dim_);
  const auto it = support_.find(Index(index.begin(), index.end()));
  return it == support_.end() ? Scalar(0) : it->second;
}

DenseTensor SparseTensor::to_dense() const {
  DenseTensor dense(order_, dim_);
  for (const auto& [idx, v] : support_) dense.set(idx, v);
  return dense;
}

SparseTensor SparseTensor::from_dense(const DenseTensor& dense) {
  SparseTensor sparse(dense.order(), dense.dim());
  for (std::size_t off = 0; off < dense.size(); ++off) {
    if (!rota::is_zero(dense[off])) sparse.support_.emplace(dense.index_of(off), dense[off]);
  }
  return sparse;
}

DenseTensor multilinear_product(std::span<const Matrix> mats, const DenseTensor& x) {
  const int d = x.order();
  const int n = x.dim();
  if (static_cast<int>(mats.size()) != d) {
    throw ValidationError("multilinear product needs " + std::to_string(d) + " matrices, got " +
                          std::to_string(mats.size()));
  }
  for (const auto& a : mats) {
    if (a.rows() != n || a.cols() != n) throw ValidationError("matrix dimension does not match tensor dimension");
  }
  const std::size_t dim = static_cast<std::size_t>(n);
  DenseTensor current = x;
  for (int mode = 0; mode < d; ++mode) {
    const Matrix& a = mats[static_cast<std::size_t>(mode)];
    const std::size_t inner = ipow(dim, d - 1 - mode);
    const std::size_t outer = ipow(dim, mode);
    DenseTensor next(d, n);
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * dim * inner;
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t in = 0; in < inner; ++in) {
          const Scalar& src = current[base + j * inner + in];
          if (is_zero(src)) continue;
          for (std::size_t i = 0; i < dim; ++i) {
            const Scalar& aij = a(static_cast<int>(i), static_cast<int>(j));
            if (!is_zero(aij)) next[base + i * inner + in] += aij * src;
          }
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

DenseTensor multilinear_product(std::span<const Matrix> mats, const SparseTensor& x) {
  return multilinear_product(mats, x.to_dense());
}

DenseTensor tensor_product(const DenseTensor& x, const DenseTensor& y) {
  if (x.order() != y.order()) throw ValidationError("tensor product needs equal orders");
  const int d = x.order();
  const int m = y.dim();
  DenseTensor t(d, x.dim() * m);
  Index k(static_cast<std::size_t>(d));
  for (std::size_t ox = 0; ox < x.size(); ++ox) {
    if (is_zero(x[ox])) continue;
    const Index i = x.index_of(ox);
    for (std::size_t oy = 0; oy < y.size(); ++oy) {
      if (is_zero(y[oy])) continue;
      const Index j = y.index_of(oy);
      for (int l = 0; l < d; ++l) {
        const auto s = static_cast<std::size_t>(l);
        k[s] = (i[s] - 1) * m + j[s];
      }
      t.set(k, x[ox] * y[oy]);
    }
  }
  return t;
}

SparseTensor tensor_product(const SparseTensor& x, const SparseTensor& y) {
  if (x.order() != y.order()) throw ValidationError("tensor product needs equal orders");
  const int d = x.order();
  const int m = y.dim();
  SparseTensor t(d, x.dim() * m);
  for (const auto& [i, xv] : x.support()) {
    for (const auto& [j, yv] : y.support()) {
      Index k(static_cast<std::size_t>(d));
      for (std::size_t l = 0; l < k.size(); ++l) k[l] = (i[l] - 1) * m + j[l];
      t.set(std::move(k), xv * yv);
    }
  }
  return t;
}

DenseTensor tensor_power(const DenseTensor& x, int k) {
  if (k < 1) throw ValidationError("tensor power exponent must be >= 1");
  DenseTensor out = x;
  for (int i = 1; i < k; ++i) out = tensor_product(out, x);
  return out;
}

SparseTensor tensor_power(const SparseTensor& x, int k) {
  if (k < 1) throw ValidationError("tensor power exponent must be >= 1");
  SparseTensor out = x;
  for (int i = 1; i < k; ++i) out = tensor_product(out, x);
  return out;
}

}  // namespace rota
