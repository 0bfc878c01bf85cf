#include <doctest.h>

#include "rota/core/errors.hpp"
#include "rota/core/levi_civita.hpp"
#include "rota/core/linalg.hpp"
#include "rota/invariants/invariants.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rota;
using rota::testing::Rng;

namespace {

PermTuple ids(int d, int m) { return PermTuple(static_cast<std::size_t>(d), Permutation::identity(m)); }

InvariantOptions with_mode(EnumerationMode mode, unsigned threads = 1) {
  InvariantOptions o;
  o.mode = mode;
  o.exec.threads = threads;
  return o;
}

Scalar pruned(const SparseTensor& x, int m, const PermTuple& perms) {
  return evaluate_invariant(x, m, perms, with_mode(EnumerationMode::kSupportPruned)).value;
}

Scalar admissible(const SparseTensor& x, int m, const PermTuple& perms) {
  return evaluate_invariant(x, m, perms, with_mode(EnumerationMode::kAdmissibleMaps)).value;
}

SparseTensor rank_one_2x2() {
  // v (x) w with v = (1, 2), w = (3, -1)
  SparseTensor x(2, 2);
  x.set({1, 1}, 3);
  x.set({1, 2}, -1);
  x.set({2, 1}, 6);
  x.set({2, 2}, -2);
  return x;
}

}  // namespace

TEST_CASE("block_sign examples") {
  CHECK(block_sign(std::vector<int>{1, 2, 2, 1}, 2) == -1);
  CHECK(block_sign(std::vector<int>{1, 1, 1, 2}, 2) == 0);
  CHECK(block_sign(std::vector<int>{1, 2, 3, 3, 1, 2}, 3) == 1);
  CHECK_THROWS_AS(block_sign(std::vector<int>{1, 2, 1}, 2), ValidationError);
  CHECK_THROWS_AS(block_sign(std::vector<int>{1, 3}, 2), ValidationError);
}

TEST_CASE("evaluate_invariant examples") {
  const auto e2 = levi_civita_tensor(2);
  CHECK(pruned(e2, 2, ids(2, 2)) == 2);
  CHECK(admissible(e2, 2, ids(2, 2)) == 2);
  CHECK(rota::testing::naive_invariant(e2.to_dense(), 2, ids(2, 2)) == 2);

  const auto e3 = levi_civita_tensor(3);
  const auto r3 = evaluate_invariant(e3, 3, ids(3, 3), with_mode(EnumerationMode::kAdmissibleMaps));
  CHECK(r3.value == 0);
  CHECK(r3.terms_visited == 216);
  CHECK(pruned(e3, 3, ids(3, 3)) == 0);
  CHECK(rota::testing::naive_invariant(e3.to_dense(), 3, ids(3, 3)) == 0);

  // dense overload
  CHECK(evaluate_invariant(e2.to_dense(), 2, ids(2, 2)).value == 2);
}

TEST_CASE("within-block transposition negates the value") {
  Rng rng(31);
  const Permutation tau({2, 1, 3, 4});
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, 2, 2));
    PermTuple perms = rota::testing::random_perm_tuple(rng, 2, 4);
    const Scalar before = pruned(x, 4, perms);
    perms[1] = perms[1].compose(tau);
    CHECK(pruned(x, 4, perms) == -before);
  }
  const auto e2 = levi_civita_tensor(2);
  CHECK(pruned(e2, 2, {Permutation::identity(2), Permutation({2, 1})}) == -2);
}

TEST_CASE("evaluate_invariant rejects bad shapes") {
  const auto e2 = levi_civita_tensor(2);
  CHECK_THROWS_AS(pruned(e2, 3, ids(2, 3)), ValidationError);
  CHECK_THROWS_AS(pruned(e2, 2, ids(3, 2)), ValidationError);
  CHECK_THROWS_AS(pruned(e2, 2, ids(2, 4)), ValidationError);
  CHECK_THROWS_AS(pruned(e2, 0, ids(2, 0)), ValidationError);
}

TEST_CASE("support-pruned and admissible enumeration match the naive sum") {
  struct Shape {
    int n, d, m, trials;
  };
  Rng rng(32);
  for (const Shape s : {Shape{2, 2, 2, 8}, Shape{2, 2, 4, 8}, Shape{2, 3, 2, 8}, Shape{3, 3, 3, 3}}) {
    for (int trial = 0; trial < s.trials; ++trial) {
      const DenseTensor x = trial == 0 && s.n == s.d ? levi_civita_tensor(s.n).to_dense()
                                                     : rota::testing::random_tensor(rng, s.d, s.n, 0.2);
      const PermTuple perms = rota::testing::random_perm_tuple(rng, s.d, s.m);
      const Scalar expected = rota::testing::naive_invariant(x, s.m, perms);
      const auto sx = SparseTensor::from_dense(x);
      CHECK(pruned(sx, s.m, perms) == expected);
      CHECK(admissible(sx, s.m, perms) == expected);
    }
  }
}

TEST_CASE("evaluation does not depend on the thread count") {
  Rng rng(33);
  const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, 3, 2, 0.1));
  const PermTuple perms = rota::testing::random_perm_tuple(rng, 3, 4);
  for (auto mode : {EnumerationMode::kSupportPruned, EnumerationMode::kAdmissibleMaps}) {
    const auto one = evaluate_invariant(x, 4, perms, with_mode(mode, 1));
    for (unsigned t : {2u, 3u, 5u}) {
      const auto many = evaluate_invariant(x, 4, perms, with_mode(mode, t));
      CHECK(many.value == one.value);
      CHECK(many.terms_visited == one.terms_visited);
      CHECK(many.nonzero_terms == one.nonzero_terms);
    }
  }
}

TEST_CASE("SL invariance under unimodular shears") {
  Rng rng(34);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2;
    const int d = rng.uniform(2, 3);
    const int m = rng.coin() ? 2 : 4;
    const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, d, n, 0.2));
    std::vector<Matrix> mats;
    for (int k = 0; k < d; ++k) {
      mats.push_back(rota::testing::random_unimodular(rng, n));
      REQUIRE(determinant(mats.back()) == 1);
    }
    const PermTuple perms = rota::testing::random_perm_tuple(rng, d, m);
    const auto moved = SparseTensor::from_dense(multilinear_product(mats, x));
    CHECK(pruned(moved, m, perms) == pruned(x, m, perms));
  }
  const auto e3 = levi_civita_tensor(3);
  std::vector<Matrix> mats;
  for (int k = 0; k < 3; ++k) mats.push_back(rota::testing::random_unimodular(rng, 3, 6));
  const auto moved = SparseTensor::from_dense(multilinear_product(mats, e3));
  CHECK(pruned(moved, 3, ids(3, 3)) == 0);
}

TEST_CASE("relative invariance") {
  const auto e2 = levi_civita_tensor(2);
  const std::vector<Matrix> id2{Matrix::identity(2), Matrix::identity(2)};
  CHECK(check_relative_invariance(e2, id2, 2, ids(2, 2)).holds);

  const std::vector<Matrix> scaled{Matrix::diagonal({3, 1}), Matrix::identity(2)};
  const auto r = check_relative_invariance(e2, scaled, 2, ids(2, 2));
  CHECK(r.holds);
  CHECK(r.lhs == 6);
  CHECK(r.rhs == 6);

  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = rng.uniform(2, 3);
    const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, d, 2, 0.2));
    std::vector<Matrix> mats;
    for (int k = 0; k < d; ++k) mats.push_back(rota::testing::random_invertible(rng, 2));
    const auto perms = rota::testing::random_perm_tuple(rng, d, 2);
    const auto rep = check_relative_invariance(x, mats, 2, perms);
    CHECK(rep.holds);
    CHECK(rep.lhs == rep.rhs);
  }

  const std::vector<Matrix> singular{Matrix(2, 2), Matrix::identity(2)};
  CHECK_THROWS_AS(check_relative_invariance(e2, singular, 2, ids(2, 2)), ValidationError);
}

TEST_CASE("canonicalize_perm_tuple examples") {
  const auto idc = canonicalize_perm_tuple(ids(2, 4), 2);
  CHECK(idc.perms == ids(2, 4));
  CHECK(idc.sign == 1);

  Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation s = rota::testing::random_permutation(rng, 4);
    const auto c = canonicalize_perm_tuple(PermTuple{s, s}, 2);
    CHECK(c.perms == ids(2, 4));
    CHECK(c.sign == 1);
  }

  const auto t = canonicalize_perm_tuple(PermTuple{Permutation::identity(4), Permutation({1, 2, 4, 3})}, 2);
  CHECK(t.perms == ids(2, 4));
  CHECK(t.sign == -1);
}

TEST_CASE("canonicalization preserves the value over (S_4)^2") {
  Rng rng(37);
  const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, 2, 2, 0.0));
  const auto all = all_permutations(4);
  for (const auto& p : all) {
    for (const auto& q : all) {
      const PermTuple perms{p, q};
      const auto c = canonicalize_perm_tuple(perms, 2);
      CHECK(c.perms[0] == Permutation::identity(4));
      const Scalar orig = pruned(x, 4, perms);
      const Scalar canon = pruned(x, 4, c.perms);
      CHECK(orig == c.sign * canon);
      CHECK(canonicalize_perm_tuple(c.perms, 2).perms == c.perms);
    }
  }
}

TEST_CASE("canonical_block_permutations counts set partitions into blocks") {
  // M! / ((n!)^(M/n) (M/n)!)
  CHECK(canonical_block_permutations(2, 2).size() == 1);
  CHECK(canonical_block_permutations(4, 2).size() == 3);
  CHECK(canonical_block_permutations(6, 3).size() == 10);
  CHECK(canonical_block_permutations(6, 2).size() == 15);
  CHECK(canonical_block_permutations(8, 2).size() == 105);
  CHECK(canonical_block_permutations(6, 2, 4).size() == 4);
  const auto reps = canonical_block_permutations(6, 2);
  CHECK(reps.front() == Permutation::identity(6));
  CHECK(std::is_sorted(reps.begin(), reps.end()));
}

TEST_CASE("degree_bound") {
  CHECK(degree_bound(1, 1) == 1);
  CHECK(degree_bound(2, 1) == 1);
  // 3^9 * 2^3
  CHECK(degree_bound(3, 2) == BigInt(19683) * 8);
  CHECK(degree_bound(3, 2) == 157464);
  CHECK(degree_bound(2, 2) == BigInt(64) * 4);
}

TEST_CASE("admissible_term_count and the term guard") {
  CHECK(admissible_term_count(3, 3, 3) == 216);
  CHECK(admissible_term_count(2, 2, 4) == 16);
  InvariantOptions guarded;
  guarded.max_terms = 100;
  CHECK_THROWS_AS(evaluate_invariant(levi_civita_tensor(3), 3, ids(3, 3), guarded), ResourceError);
  guarded.max_terms = 216;
  CHECK(evaluate_invariant(levi_civita_tensor(3), 3, ids(3, 3), guarded).value == 0);
}

TEST_CASE("find_nonzero_term") {
  const auto e2 = levi_civita_tensor(2);
  const auto term = find_nonzero_term(e2, 2, ids(2, 2));
  REQUIRE(term.has_value());
  CHECK(term->value != 0);
  REQUIRE(term->maps.size() == 2);
  Scalar product = term->sign;
  for (int i = 1; i <= 2; ++i) {
    product *= e2.get(std::vector<int>{term->maps[0][static_cast<std::size_t>(i - 1)],
                                       term->maps[1][static_cast<std::size_t>(i - 1)]});
  }
  CHECK(product == term->value);

  // P vanishes on E_3 at M = 3 but individual terms do not
  CHECK(find_nonzero_term(levi_civita_tensor(3), 3, ids(3, 3)).has_value());
  CHECK_FALSE(find_nonzero_term(SparseTensor(2, 2), 2, ids(2, 2)).has_value());
}

TEST_CASE("semistability_search on E_2") {
  SearchOptions opt;
  opt.max_degree = 2;
  opt.exec.threads = 1;
  const auto out = semistability_search(levi_civita_tensor(2), opt);
  CHECK(out.status == SearchStatus::kFound);
  REQUIRE(out.certificate.has_value());
  CHECK(out.certificate->degree == 2);
  CHECK(abs(out.certificate->value) == 2);
  CHECK(verify_certificate(levi_civita_tensor(2), *out.certificate));
}

TEST_CASE("semistability_search on a rank-one 2x2 tensor finds nothing") {
  for (auto strategy : {SearchStrategy::kExhaustiveCanonical, SearchStrategy::kRandomSample}) {
    SearchOptions opt;
    opt.max_degree = 4;
    opt.strategy = strategy;
    opt.budget = 50;
    opt.seed = 7;
    const auto out = semistability_search(rank_one_2x2(), opt);
    CHECK(out.status == SearchStatus::kInconclusive);
    CHECK_FALSE(out.certificate.has_value());
  }
}

TEST_CASE("semistability_search reports unstable only after a complete search") {
  SearchOptions opt;
  opt.max_degree = 1;
  const auto zero = semistability_search(SparseTensor(2, 1), opt);
  CHECK(zero.status == SearchStatus::kUnstable);

  opt.max_degree = 4;
  const auto partial = semistability_search(SparseTensor(2, 2), opt);
  CHECK(partial.status == SearchStatus::kInconclusive);
}

TEST_CASE("semistability_search on E_3 yields a verifiable certificate") {
  SearchOptions opt;
  opt.max_degree = 6;
  opt.budget = 200;
  const auto e3 = levi_civita_tensor(3);
  const auto out = semistability_search(e3, opt);
  REQUIRE(out.status == SearchStatus::kFound);
  const auto& cert = *out.certificate;
  CHECK(cert.degree == 6);
  CHECK(cert.value != 0);
  CHECK(verify_certificate(e3, cert));
  CHECK(admissible(e3, cert.degree, cert.perms) == cert.value);
  // at M = 3 the only canonical tuple evaluates to zero
  REQUIRE(out.degrees.size() == 2);
  CHECK(out.degrees[0].exhausted);
}

TEST_CASE("semistability_search is deterministic across threads and runs") {
  Rng rng(38);
  const auto x = SparseTensor::from_dense(rota::testing::random_tensor(rng, 3, 2, 0.5));
  for (auto strategy : {SearchStrategy::kExhaustiveCanonical, SearchStrategy::kRandomSample}) {
    SearchOptions opt;
    opt.max_degree = 4;
    opt.strategy = strategy;
    opt.seed = 99;
    opt.budget = 40;
    opt.exec.threads = 1;
    const auto a = semistability_search(x, opt);
    opt.exec.threads = 3;
    const auto b = semistability_search(x, opt);
    const auto c = semistability_search(x, opt);
    CHECK(a.status == b.status);
    CHECK(b.status == c.status);
    REQUIRE(a.certificate.has_value() == b.certificate.has_value());
    if (a.certificate) {
      CHECK(a.certificate->degree == b.certificate->degree);
      CHECK(a.certificate->perms == b.certificate->perms);
      CHECK(a.certificate->value == b.certificate->value);
      CHECK(c.certificate->perms == b.certificate->perms);
    }
  }
}

TEST_CASE("verify_certificate rejects a wrong value") {
  InvariantCertificate cert{2, ids(2, 2), 3};
  CHECK_FALSE(verify_certificate(levi_civita_tensor(2), cert));
  cert.value = 0;
  CHECK_FALSE(verify_certificate(SparseTensor(2, 2), cert));
}

TEST_CASE("parse_search_strategy") {
  CHECK(parse_search_strategy("exhaustive") == SearchStrategy::kExhaustiveCanonical);
  CHECK(parse_search_strategy("exhaustive-canonical") == SearchStrategy::kExhaustiveCanonical);
  CHECK(parse_search_strategy("random") == SearchStrategy::kRandomSample);
  CHECK(parse_search_strategy("random-sample") == SearchStrategy::kRandomSample);
  CHECK_THROWS_AS(parse_search_strategy("greedy"), UsageError);
}

TEST_CASE("alon_tarsi_difference") {
  CHECK(alon_tarsi_difference(1) == 1);
  CHECK(abs(alon_tarsi_difference(2)) == 2);
  CHECK(alon_tarsi_difference(3) == 0);
  for (int n = 1; n <= 3; ++n) {
    CHECK(abs(alon_tarsi_difference(n)) == abs(pruned(levi_civita_tensor(n), n, ids(n, n))));
  }
  CHECK_THROWS_AS(alon_tarsi_difference(6), ResourceError);
  CHECK_THROWS_AS(alon_tarsi_difference(4, 3), ResourceError);
  CHECK_THROWS_AS(alon_tarsi_difference(0), ValidationError);
}
