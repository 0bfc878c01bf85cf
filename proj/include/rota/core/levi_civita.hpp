#pragma once

#include <span>

#include "rota/core/tensor.hpp"

namespace rota {

/// eps(t) for a tuple t over [n], n = |t|: the sign when t is a permutation,
/// 0 when an entry repeats. Throws ValidationError when an entry leaves [n].
int levi_civita_symbol(std::span<const int> t);

/// E_n as a sparse order-n tensor with n! nonzero entries.
SparseTensor levi_civita_tensor(int n);

}  // namespace rota
