#include <algorithm>
#include <string>

#include "rota/core/errors.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

namespace {

Permutation reduce_blocks(const Permutation& p, int n, int& sign) {
  const auto bn = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> blocks;
  const auto& line = p.one_line();
  for (std::size_t start = 0; start < line.size(); start += bn) {
    std::vector<int> block(line.begin() + static_cast<std::ptrdiff_t>(start),
                           line.begin() + static_cast<std::ptrdiff_t>(start + bn));
    sign *= inversion_parity_sign(block);
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<int> out;
  out.reserve(line.size());
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return Permutation(std::move(out));
}

class BlockPartitionGenerator {
 public:
  BlockPartitionGenerator(int degree, int n, std::size_t limit) : n_(n), limit_(limit) {
    for (int i = 1; i <= degree; ++i) remaining_.push_back(i);
  }

  std::vector<Permutation> run() {
    recurse();
    return std::move(out_);
  }

 private:
  bool full() const { return limit_ != 0 && out_.size() >= limit_; }

  void recurse() {
    if (full()) return;
    if (remaining_.empty()) {
      out_.emplace_back(line_);
      return;
    }
    const int lead = remaining_.front();
    std::vector<int> rest(remaining_.begin() + 1, remaining_.end());
    const auto pick = static_cast<std::size_t>(n_ - 1);
    std::vector<std::size_t> combo(pick);
    for (std::size_t i = 0; i < pick; ++i) combo[i] = i;
    while (true) {
      std::vector<int> block{lead};
      std::vector<bool> taken(rest.size(), false);
      for (std::size_t c : combo) {
        block.push_back(rest[c]);
        taken[c] = true;
      }
      std::vector<int> saved = remaining_;
      remaining_.clear();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!taken[i]) remaining_.push_back(rest[i]);
      }
      line_.insert(line_.end(), block.begin(), block.end());
      recurse();
      line_.resize(line_.size() - block.size());
      remaining_ = std::move(saved);
      if (full()) return;
      // Next (n-1)-combination of rest in lexicographic order.
      std::size_t i = pick;
      while (i > 0 && combo[i - 1] == rest.size() - pick + (i - 1)) --i;
      if (i == 0) return;
      ++combo[i - 1];
      for (std::size_t j = i; j < pick; ++j) combo[j] = combo[j - 1] + 1;
    }
  }

  int n_;
  std::size_t limit_;
  std::vector<int> remaining_;
  std::vector<int> line_;
  std::vector<Permutation> out_;
};

}  // namespace

CanonicalPermTuple canonicalize_perm_tuple(std::span<const Permutation> perms, int n) {
  CanonicalPermTuple result;
  if (perms.empty()) return result;
  const int degree = perms.front().size();
  if (n < 1 || degree % n != 0) {
    throw ValidationError("permutation degree " + std::to_string(degree) + " is not divisible by n = " +
                          std::to_string(n));
  }
  const Permutation normaliser = perms.front().inverse();
  for (const auto& p : perms) {
    if (p.size() != degree) throw ValidationError("permutations of a tuple must share one degree");
    result.perms.push_back(reduce_blocks(normaliser.compose(p), n, result.sign));
  }
  return result;
}

std::vector<Permutation> canonical_block_permutations(int degree, int n, std::size_t limit) {
  if (n < 1 || degree < 1 || degree % n != 0) throw ValidationError("degree must be a positive multiple of n");
  return BlockPartitionGenerator(degree, n, limit).run();
}

BigInt degree_bound(int order, int dim) {
  if (order < 1 || dim < 1) throw ValidationError("degree bound needs d, n >= 1");
  const auto d = static_cast<unsigned long>(order);
  const auto n = static_cast<unsigned long>(dim);
  BigInt left;
  BigInt right;
  mpz_ui_pow_ui(left.get_mpz_t(), d, d * n * n - d);
  mpz_ui_pow_ui(right.get_mpz_t(), n, d);
  return left * right;
}

}  // namespace rota
