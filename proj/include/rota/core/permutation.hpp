#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace rota {

/// Bijection of [m] = {1, ..., m} in one-line notation (p(1), ..., p(m)).
class Permutation {
 public:
  /// Throws ValidationError unless one_line is a permutation of 1..m.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  /// (this ∘ rhs)(i) = this(rhs(i)).
  Permutation compose(const Permutation& rhs) const;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// (-1)^inversions. Throws ValidationError on malformed one-line notation.
int perm_sign(std::span<const int> one_line);
int perm_sign(const Permutation& p);

/// Parity of the inversion count of an arbitrary sequence; no validation.
int inversion_parity_sign(std::span<const int> values);

/// All permutations of [m] in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int m);

}  // namespace rota
