#include "rota/core/levi_civita.hpp"

#include <string>

#include "rota/core/errors.hpp"
#include "rota/core/permutation.hpp"

namespace rota {

int levi_civita_symbol(std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  std::vector<bool> seen(t.size() + 1, false);
  bool repeated = false;
  for (int v : t) {
    if (v < 1 || v > n) {
      throw ValidationError("Levi-Civita argument " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) repeated = true;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return repeated ? 0 : inversion_parity_sign(t);
}

SparseTensor levi_civita_tensor(int n) {
  if (n < 1) throw ValidationError("Levi-Civita tensor needs n >= 1");
  SparseTensor e(n, n);
  for (const auto& p : all_permutations(n)) e.set(p.one_line(), Scalar(p.sign()));
  return e;
}

}  // namespace rota
