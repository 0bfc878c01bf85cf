#include "rota/core/errors.hpp"
#include "rota/core/levi_civita.hpp"
#include "rota/core/linalg.hpp"
#include "rota/solver/rota.hpp"

namespace rota {

DenseTensor determinantal_tensor(std::span<const Matrix> mats) {
  const int n = static_cast<int>(mats.size());
  if (n < 1) throw ValidationError("determinantal tensor needs at least one matrix");
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw ValidationError("determinantal tensor needs n matrices of size n x n");
  }
  // columns[k][c] = column c of matrix k.
  std::vector<std::vector<std::vector<Scalar>>> columns(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    for (int c = 0; c < n; ++c) columns[k].push_back(mats[k].column(c));
  }
  DenseTensor d(n, n);
  std::vector<std::vector<Scalar>> picked(mats.size());
  for (std::size_t off = 0; off < d.size(); ++off) {
    const Index idx = d.index_of(off);
    for (std::size_t k = 0; k < idx.size(); ++k) picked[k] = columns[k][static_cast<std::size_t>(idx[k] - 1)];
    d[off] = determinant_of_columns(picked);
  }
  return d;
}

DeterminantalTensor::DeterminantalTensor(const BasisSequence& bases)
    : bases_(bases), tensor_(determinantal_tensor(bases.bases())) {}

bool DeterminantalTensor::spot_check(std::span<const int> index) const {
  validate_index(index, tensor_.order(), tensor_.dim());
  std::vector<std::vector<Scalar>> picked;
  for (std::size_t k = 0; k < index.size(); ++k) picked.push_back(bases_.vector(static_cast<int>(k), index[k] - 1));
  return determinant_of_columns(picked) == tensor_.at(index);
}

DeterminantalTensor determinantal_tensor(const BasisSequence& bases) { return DeterminantalTensor(bases); }

bool check_determinantal_base_change(std::span<const Matrix> a, std::span<const Matrix> b) {
  if (a.size() != b.size()) throw ValidationError("base-change check needs equally many A and B matrices");
  std::vector<Matrix> products;
  std::vector<Matrix> transposes;
  for (std::size_t k = 0; k < a.size(); ++k) {
    products.push_back(a[k] * b[k]);
    transposes.push_back(b[k].transpose());
  }
  return determinantal_tensor(products) == multilinear_product(transposes, determinantal_tensor(a));
}

bool check_determinantal_factorisation(const BasisSequence& bases) {
  std::vector<Matrix> transposes;
  for (const auto& b : bases.bases()) transposes.push_back(b.transpose());
  return determinantal_tensor(bases).tensor() == multilinear_product(transposes, levi_civita_tensor(bases.n()));
}

}  // namespace rota
