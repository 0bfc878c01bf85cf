#include "rota/core/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rota/core/errors.hpp"

namespace rota {

namespace {

void validate_one_line(std::span<const int> one_line) {
  const int m = static_cast<int>(one_line.size());
  std::vector<bool> seen(one_line.size() + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > m) {
      throw ValidationError("permutation entry " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation repeats entry " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  validate_one_line(one_line_);
}

Permutation Permutation::identity(int m) {
  if (m < 0) throw ValidationError("negative permutation degree");
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (rhs.size() != size()) throw ValidationError("composing permutations of different degree");
  std::vector<int> out(one_line_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = one_line_[static_cast<std::size_t>(rhs.one_line_[i] - 1)];
  }
  return Permutation(std::move(out));
}

int Permutation::sign() const { return inversion_parity_sign(one_line_); }

int inversion_parity_sign(std::span<const int> values) {
  bool odd = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) odd = !odd;
    }
  }
  return odd ? -1 : 1;
}

int perm_sign(std::span<const int> one_line) {
  validate_one_line(one_line);
  return inversion_parity_sign(one_line);
}

int perm_sign(const Permutation& p) { return p.sign(); }

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v = Permutation::identity(m).one_line();
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace rota
