#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rota/core/matrix.hpp"
#include "rota/core/parallel.hpp"
#include "rota/core/permutation.hpp"
#include "rota/core/scalar.hpp"
#include "rota/core/tensor.hpp"

namespace rota {

/// d permutations of [M], one per tensor mode.
using PermTuple = std::vector<Permutation>;

/// eps(J) = product of Levi-Civita symbols over the consecutive n-blocks of
/// J : [M] -> [n]. Throws ValidationError when n does not divide M or an
/// entry leaves [n].
int block_sign(std::span<const int> map, int n);

/// How P_{M,pi}(X) is enumerated. Both visit exactly the admissible maps
/// (K_k = J_k ∘ pi_k block-wise permutations); kSupportPruned additionally
/// never extends a partial term through a zero entry of X.
enum class EnumerationMode { kSupportPruned, kAdmissibleMaps };

struct InvariantOptions {
  EnumerationMode mode = EnumerationMode::kSupportPruned;
  /// Refuse inputs whose admissible term count ((n!)^(M/n))^d exceeds this
  /// (0 disables the guard).
  std::uint64_t max_terms = 0;
  ExecOptions exec{};
};

struct InvariantResult {
  Scalar value;
  std::uint64_t terms_visited = 0;  // complete admissible terms examined
  std::uint64_t nonzero_terms = 0;
};

/// P_{M,pi}(X) = sum_{J_1..J_d : [M]->[n]} prod_k eps(J_k ∘ pi_k)
///               prod_i X(J_1(i), ..., J_d(i)).
/// Throws ValidationError when n does not divide M or the tuple has the
/// wrong shape, ResourceError when the term guard trips.
InvariantResult evaluate_invariant(const SparseTensor& x, int degree, std::span<const Permutation> perms,
                                   const InvariantOptions& options = {});
InvariantResult evaluate_invariant(const DenseTensor& x, int degree, std::span<const Permutation> perms,
                                   const InvariantOptions& options = {});

/// ((n!)^(M/n))^d.
BigInt admissible_term_count(int order, int dim, int degree);

/// One nonzero term of P_{M,pi}(X): maps[k][i - 1] = J_k(i).
struct InvariantTerm {
  std::vector<std::vector<int>> maps;
  int sign = 1;
  Scalar value;  // sign * prod_i X(J(i))
};

/// First nonzero term in support-pruned enumeration order, or nullopt when
/// the polynomial has none (or the node budget, if nonzero, runs out).
std::optional<InvariantTerm> find_nonzero_term(const SparseTensor& x, int degree, std::span<const Permutation> perms,
                                               std::uint64_t max_nodes = 0);

struct RelativeInvarianceReport {
  Scalar lhs;  // P((A_1..A_d)·X)
  Scalar rhs;  // P(X) * prod_k det(A_k)^(M/n)
  bool holds = false;
};

/// Evaluates both sides of P((A_1, ..., A_d)·X) = P(X) prod det(A_k)^(M/n).
/// Throws ValidationError on a singular matrix.
RelativeInvarianceReport check_relative_invariance(const SparseTensor& x, std::span<const Matrix> mats, int degree,
                                                   std::span<const Permutation> perms,
                                                   const InvariantOptions& options = {});

struct CanonicalPermTuple {
  PermTuple perms;
  int sign = 1;  // P(original) = sign * P(canonical)
};

/// Normalises pi_1 to the identity by simultaneous left composition with
/// pi_1^{-1}, then reduces every pi_k modulo within-block permutations
/// (tracked in sign) and block swaps: each block's images are sorted and
/// blocks are ordered by their least image.
CanonicalPermTuple canonicalize_perm_tuple(std::span<const Permutation> perms, int n);

/// Canonical single permutations of [M] w.r.t. n-blocks, in lexicographic
/// order of one-line notation; at most `limit` of them (0 = all).
std::vector<Permutation> canonical_block_permutations(int degree, int n, std::size_t limit = 0);

/// d^(d n^2 - d) * n^d.
BigInt degree_bound(int order, int dim);

enum class SearchStrategy { kExhaustiveCanonical, kRandomSample };
/// "exhaustive" / "exhaustive-canonical" or "random" / "random-sample";
/// throws UsageError otherwise.
SearchStrategy parse_search_strategy(std::string_view name);

struct InvariantCertificate {
  int degree = 0;
  PermTuple perms;
  Scalar value;
};

enum class SearchStatus { kFound, kInconclusive, kUnstable };

struct SearchOptions {
  int max_degree = 0;
  SearchStrategy strategy = SearchStrategy::kExhaustiveCanonical;
  /// Maximum number of candidate tuples evaluated per degree M.
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  /// Per-evaluation admissible term guard (0 disables).
  std::uint64_t max_terms = 0;
  ExecOptions exec{};
};

struct SearchDegreeStats {
  int degree = 0;
  std::uint64_t evaluated = 0;
  bool exhausted = false;  // every canonical tuple of this degree was checked
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kInconclusive;
  std::optional<InvariantCertificate> certificate;
  std::vector<SearchDegreeStats> degrees;
};

/// Looks for (M, pi) with P_{M,pi}(X) != 0, M = n, 2n, ..., max_degree.
/// kUnstable is reported only after a complete search up to at least the
/// degree bound; an incomplete or budget-limited miss is kInconclusive.
SearchOutcome semistability_search(const SparseTensor& x, const SearchOptions& options);

/// Re-evaluates the certificate; true iff the stored value is reproduced
/// and nonzero.
bool verify_certificate(const SparseTensor& x, const InvariantCertificate& cert, const InvariantOptions& options = {});

/// Sum over all n x n Latin squares of the product of their row and column
/// permutation signs. Throws ResourceError for n > max_n.
BigInt alon_tarsi_difference(int n, int max_n = 5);

}  // namespace rota
