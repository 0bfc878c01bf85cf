#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "rota/core/errors.hpp"
#include "rota/invariants/invariants.hpp"

namespace rota {

namespace {

// Uniform integer in [0, bound) from raw 64-bit engine output (rejection
// sampling), so draws do not depend on the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Permutation random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> line = Permutation::identity(m).one_line();
  for (std::size_t i = line.size(); i > 1; --i) {
    std::swap(line[i - 1], line[static_cast<std::size_t>(bounded(rng, i))]);
  }
  return Permutation(std::move(line));
}

// Supplies candidate tuples in a fixed order; next() returns false when the
// degree's candidates (or the per-degree budget) are used up.
class CandidateStream {
 public:
  CandidateStream(int order, int dim, int degree, const SearchOptions& options, std::mt19937_64& rng)
      : order_(order), dim_(dim), degree_(degree), options_(options), rng_(rng) {
    if (options.strategy == SearchStrategy::kExhaustiveCanonical && order > 1) {
      const std::uint64_t cap = options.budget == UINT64_MAX ? options.budget : options.budget + 1;
      reps_ = canonical_block_permutations(degree, dim, static_cast<std::size_t>(cap));
      if (reps_.size() > options.budget) {
        truncated_ = true;
        reps_.erase(reps_.begin() + static_cast<std::ptrdiff_t>(options.budget), reps_.end());
      }
      pick_.assign(static_cast<std::size_t>(order - 1), 0);
    }
  }

  bool next(PermTuple& out) {
    if (produced_ >= options_.budget) return false;
    out.clear();
    out.push_back(Permutation::identity(degree_));
    if (options_.strategy == SearchStrategy::kRandomSample) {
      PermTuple raw{out.front()};
      for (int k = 1; k < order_; ++k) raw.push_back(random_permutation(rng_, degree_));
      out = canonicalize_perm_tuple(raw, dim_).perms;
    } else {
      if (done_) return false;
      for (std::size_t p : pick_) out.push_back(reps_[p]);
      advance();
    }
    ++produced_;
    return true;
  }

  // All canonical tuples of this degree were produced.
  bool exhausted() const { return options_.strategy == SearchStrategy::kExhaustiveCanonical && done_ && !truncated_; }

 private:
  void advance() {
    std::size_t level = pick_.size();
    while (level > 0 && pick_[level - 1] + 1 == reps_.size()) pick_[--level] = 0;
    if (level == 0) {
      done_ = true;
      return;
    }
    ++pick_[level - 1];
  }

  int order_;
  int dim_;
  int degree_;
  const SearchOptions& options_;
  std::mt19937_64& rng_;
  std::vector<Permutation> reps_;
  std::vector<std::size_t> pick_;
  std::uint64_t produced_ = 0;
  bool done_ = false;
  bool truncated_ = false;
};

}  // namespace

SearchStrategy parse_search_strategy(std::string_view name) {
  if (name == "exhaustive" || name == "exhaustive-canonical") return SearchStrategy::kExhaustiveCanonical;
  if (name == "random" || name == "random-sample") return SearchStrategy::kRandomSample;
  throw UsageError("unknown search strategy '" + std::string(name) + "'");
}

SearchOutcome semistability_search(const SparseTensor& x, const SearchOptions& options) {
  const int n = x.dim();
  if (options.max_degree < n || options.max_degree % n != 0) {
    throw ValidationError("max M = " + std::to_string(options.max_degree) + " must be a positive multiple of n = " +
                          std::to_string(n));
  }
  SearchOutcome outcome;
  std::mt19937_64 rng(options.seed);
  const unsigned workers = resolve_threads(options.exec.threads);
  const std::size_t batch_size = workers == 1 ? 1 : static_cast<std::size_t>(workers) * 4;
  InvariantOptions eval;
  eval.max_terms = options.max_terms;
  eval.exec.threads = 1;
  bool all_exhausted = true;

  for (int degree = n; degree <= options.max_degree; degree += n) {
    CandidateStream stream(x.order(), n, degree, options, rng);
    SearchDegreeStats stats;
    stats.degree = degree;
    std::vector<PermTuple> batch;
    std::vector<Scalar> values;
    while (true) {
      batch.clear();
      PermTuple candidate;
      while (batch.size() < batch_size && stream.next(candidate)) batch.push_back(candidate);
      if (batch.empty()) break;
      values.assign(batch.size(), Scalar(0));
      const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, batch.size()));
      run_workers(used, [&](unsigned w) {
        for (std::size_t i = w; i < batch.size(); i += used) values[i] = evaluate_invariant(x, degree, batch[i], eval).value;
      });
      // Lowest index in the batch wins, independent of completion order.
      for (std::size_t i = 0; i < batch.size(); ++i) {
        ++stats.evaluated;
        if (!is_zero(values[i])) {
          outcome.degrees.push_back(stats);
          outcome.status = SearchStatus::kFound;
          outcome.certificate = InvariantCertificate{degree, batch[i], values[i]};
          return outcome;
        }
      }
    }
    stats.exhausted = stream.exhausted();
    all_exhausted = all_exhausted && stats.exhausted;
    outcome.degrees.push_back(stats);
  }
  const bool past_bound = BigInt(options.max_degree) >= degree_bound(x.order(), n);
  outcome.status = all_exhausted && past_bound ? SearchStatus::kUnstable : SearchStatus::kInconclusive;
  return outcome;
}

bool verify_certificate(const SparseTensor& x, const InvariantCertificate& cert, const InvariantOptions& options) {
  if (is_zero(cert.value)) return false;
  return evaluate_invariant(x, cert.degree, cert.perms, options).value == cert.value;
}

}  // namespace rota
