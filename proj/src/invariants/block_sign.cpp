#include <string>

#include "rota/core/errors.hpp"
#include "rota/core/levi_civita.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

int block_sign(std::span<const int> map, int n) {
  if (n < 1) throw ValidationError("block size must be >= 1");
  if (map.size() % static_cast<std::size_t>(n) != 0) {
    throw ValidationError("map length " + std::to_string(map.size()) + " is not divisible by n = " + std::to_string(n));
  }
  int sign = 1;
  for (std::size_t start = 0; start < map.size(); start += static_cast<std::size_t>(n)) {
    sign *= levi_civita_symbol(map.subspan(start, static_cast<std::size_t>(n)));
  }
  return sign;
}

}  // namespace rota
