#include <doctest.h>

#include <numeric>
#include <set>

#include "rota/core/errors.hpp"
#include "rota/core/levi_civita.hpp"
#include "rota/core/linalg.hpp"
#include "rota/solver/rota.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rota;
using rota::testing::Rng;

namespace {

std::vector<Matrix> transposes(const BasisSequence& b) {
  std::vector<Matrix> out;
  for (const auto& m : b.bases()) out.push_back(m.transpose());
  return out;
}

bool is_latin_square(const ArrangementMatrix& a) {
  const int n = a.n();
  if (a.columns() != n) return false;
  for (int i = 0; i < n; ++i) {
    std::set<int> row, col;
    for (int j = 0; j < n; ++j) {
      row.insert(a.at(i, j));
      col.insert(a.at(j, i));
    }
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
  }
  return true;
}

ArrangementMatrix grid2(std::vector<int> r1, std::vector<int> r2) {
  const int m = static_cast<int>(r1.size());
  return ArrangementMatrix(2, m, {std::move(r1), std::move(r2)});
}

}  // namespace

TEST_CASE("BasisSequence validation") {
  CHECK(BasisSequence::identities(3).n() == 3);
  CHECK_THROWS_AS(BasisSequence({Matrix::identity(2)}), ValidationError);
  CHECK_THROWS_AS(BasisSequence({Matrix::identity(2), Matrix(2, 2)}), ValidationError);
  CHECK_THROWS_AS(BasisSequence({Matrix::identity(3), Matrix::identity(3)}), ValidationError);
  CHECK_THROWS_AS(BasisSequence({Matrix::identity(2), Matrix(2, 3)}), ValidationError);
  CHECK_THROWS_AS(BasisSequence(std::vector<Matrix>{}), ValidationError);
  // bases may coincide
  const Matrix b = Matrix::from_columns({{1, 1}, {0, 2}});
  CHECK(BasisSequence({b, b}).vector(1, 1) == std::vector<Scalar>{0, 2});
}

TEST_CASE("determinantal tensor of identity bases is E_n") {
  for (int n = 1; n <= 4; ++n) {
    const auto d = determinantal_tensor(BasisSequence::identities(n));
    CHECK(SparseTensor::from_dense(d.tensor()) == levi_civita_tensor(n));
  }
  const auto one = determinantal_tensor(BasisSequence({Matrix::diagonal({5})}));
  CHECK(one.tensor().at(std::vector<int>{1}) == 5);
}

TEST_CASE("determinantal tensor entries are column determinants") {
  Rng rng(41);
  const auto b = rota::testing::random_bases(rng, 3);
  const auto d = determinantal_tensor(b);
  for (std::size_t off = 0; off < d.tensor().size(); ++off) {
    const Index idx = d.tensor().index_of(off);
    Matrix cols(3, 3);
    for (int k = 0; k < 3; ++k) {
      const auto v = b.vector(k, idx[static_cast<std::size_t>(k)] - 1);
      for (int r = 0; r < 3; ++r) cols(r, k) = v[static_cast<std::size_t>(r)];
    }
    CHECK(d.tensor()[off] == rota::testing::cofactor_det(cols));
    CHECK(d.spot_check(idx));
  }
}

TEST_CASE("D(B) = (B_1^T, ..., B_n^T) . E_n") {
  Rng rng(42);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto b = rota::testing::random_bases(rng, n);
      const auto expected = rota::testing::naive_multilinear(transposes(b), levi_civita_tensor(n).to_dense());
      CHECK(determinantal_tensor(b).tensor() == expected);
      CHECK(check_determinantal_factorisation(b));
    }
  }
}

TEST_CASE("determinantal base change") {
  const std::vector<Matrix> id2{Matrix::identity(2), Matrix::identity(2)};
  CHECK(check_determinantal_base_change(id2, id2));
  Rng rng(43);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Matrix> a, b;
      for (int k = 0; k < n; ++k) {
        a.push_back(rota::testing::random_invertible(rng, n));
        b.push_back(rota::testing::random_invertible(rng, n));
      }
      CHECK(check_determinantal_base_change(a, b));
    }
  }
  CHECK_THROWS_AS(check_determinantal_base_change(id2, std::vector<Matrix>{Matrix::identity(2)}), ValidationError);
}

TEST_CASE("P_{2,id}(D) = 2 det(B_1) det(B_2)") {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = rota::testing::random_bases(rng, 2);
    const auto d = SparseTensor::from_dense(determinantal_tensor(b).tensor());
    const PermTuple perms(2, Permutation::identity(2));
    const Scalar value = evaluate_invariant(d, 2, perms).value;
    CHECK(value == 2 * determinant(b.basis(0)) * determinant(b.basis(1)));
    CHECK(value != 0);
  }
}

TEST_CASE("verify_arrangement examples") {
  const auto id2 = BasisSequence::identities(2);
  CHECK(verify_arrangement(id2, grid2({1, 2}, {2, 1})).ok);

  const auto bad = verify_arrangement(id2, grid2({1, 2}, {1, 2}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_column == 1);
  CHECK_FALSE(bad.diagnostic.empty());

  const auto unbalanced = verify_arrangement(id2, grid2({1, 1, 2, 1}, {2, 2, 1, 2}));
  CHECK_FALSE(unbalanced.ok);
  CHECK(unbalanced.failing_row == 1);

  const auto odd = verify_arrangement(id2, grid2({1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(odd.ok);
  CHECK_FALSE(odd.diagnostic.empty());

  CHECK_THROWS_AS(verify_arrangement(BasisSequence::identities(3), grid2({1, 2}, {2, 1})), ValidationError);
  CHECK_THROWS_AS(ArrangementMatrix(2, 2, {{1, 3}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(ArrangementMatrix(2, 2, {{1, 2}}), ValidationError);
}

TEST_CASE("solve_rota examples") {
  RotaOptions opt;
  const auto one = solve_rota(BasisSequence({Matrix::diagonal({Scalar(3, 4)})}), opt);
  REQUIRE(one.arrangement.has_value());
  CHECK(one.ell == 1);
  CHECK(one.arrangement->grid() == std::vector<std::vector<int>>{{1}});

  for (int n = 2; n <= 4; ++n) {
    const auto id = BasisSequence::identities(n);
    const auto r = solve_rota(id, opt);
    REQUIRE(r.arrangement.has_value());
    CHECK(r.ell == 1);
    CHECK(is_latin_square(*r.arrangement));
    CHECK(verify_arrangement(id, *r.arrangement).ok);
  }

  CHECK_THROWS_AS(parse_rota_strategy("greedy"), UsageError);
  RotaOptions bad;
  bad.min_ell = 2;
  bad.max_ell = 1;
  CHECK_THROWS_AS(solve_rota(BasisSequence::identities(2), bad), ValidationError);
}

TEST_CASE("solve_rota round trip for both strategies") {
  Rng rng(45);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto b = rota::testing::random_bases(rng, n);
      std::optional<ArrangementMatrix> direct_grid;
      for (auto strategy : {RotaStrategy::kDirect, RotaStrategy::kInvariant}) {
        RotaOptions opt;
        opt.strategy = strategy;
        const auto r = solve_rota(b, opt);
        REQUIRE(r.arrangement.has_value());
        CHECK(verify_arrangement(b, *r.arrangement).ok);
        CHECK(r.arrangement->multiplicity() == r.ell);
        if (strategy == RotaStrategy::kInvariant) {
          REQUIRE(r.term.has_value());
          CHECK(r.term->value != 0);
        }
      }
    }
  }
}

TEST_CASE("solve_rota at ell = 2") {
  Rng rng(46);
  const auto b = rota::testing::random_bases(rng, 3);
  for (auto strategy : {RotaStrategy::kDirect, RotaStrategy::kInvariant}) {
    RotaOptions opt;
    opt.strategy = strategy;
    opt.min_ell = 2;
    opt.max_ell = 2;
    const auto r = solve_rota(b, opt);
    REQUIRE(r.arrangement.has_value());
    CHECK(r.ell == 2);
    CHECK(r.arrangement->columns() == 6);
    CHECK(verify_arrangement(b, *r.arrangement).ok);
  }
}

TEST_CASE("an exhausted node budget gives not-found, not an error") {
  RotaOptions opt;
  opt.node_budget = 1;
  opt.max_ell = 1;
  const auto r = solve_rota(BasisSequence::identities(4), opt);
  CHECK_FALSE(r.arrangement.has_value());
  CHECK(r.budget_exhausted);
}

TEST_CASE("permuting columns preserves a valid arrangement") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = rota::testing::random_bases(rng, 3);
    RotaOptions opt;
    opt.min_ell = 1 + trial % 2;
    opt.max_ell = opt.min_ell;
    const auto r = solve_rota(b, opt);
    REQUIRE(r.arrangement.has_value());
    std::vector<int> order(static_cast<std::size_t>(r.arrangement->columns()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    const auto permuted = r.arrangement->permute_columns(order);
    CHECK(verify_arrangement(b, permuted).ok);
    for (int j = 0; j < permuted.columns(); ++j) {
      CHECK(permuted.resolve_column(b, j) == r.arrangement->resolve_column(b, order[static_cast<std::size_t>(j)]));
    }
  }
}
