#include <doctest.h>

#include <qgrass/errors.hpp>
#include <qgrass/linalg.hpp>
#include <qgrass/representation.hpp>

#include "support/oracles.hpp"

using namespace qgrass;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF3 = FieldSpec::prime(3);

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("Fp:7").characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec::prime(9), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::prime(1), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::parse("F7"), PreconditionError);
  CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("scalars are canonical") {
  const Scalar half(kQ, 2, 4);
  CHECK(half.rational().get_num() == 1);
  CHECK(half.rational().get_den() == 2);
  CHECK(Scalar(kQ, 3, -6) == Scalar(kQ, -1, 2));
  CHECK(Scalar(kF3, -1).residue() == 2);
  CHECK(Scalar(kF3, 7).residue() == 1);
  CHECK((Scalar(kF3, 2) * Scalar(kF3, 2)).is_one());
  CHECK(Scalar(kF3, 2).inverse() == Scalar(kF3, 2));
  CHECK_THROWS_AS(Scalar(kF3, 0).inverse(), PreconditionError);
  CHECK_THROWS_AS(Scalar(kF3, 1) + Scalar(kQ, 1), FieldMismatch);
  CHECK(Scalar(FieldSpec::prime(5), 2).pow(4).is_one());
}

TEST_CASE("rational sums agree computed two ways") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const long a = static_cast<long>(uniform_below(rng, 2001)) - 1000;
    const long b = static_cast<long>(uniform_below(rng, 1000)) + 1;
    const long c = static_cast<long>(uniform_below(rng, 2001)) - 1000;
    const long d = static_cast<long>(uniform_below(rng, 1000)) + 1;
    const Scalar direct = Scalar(kQ, a, b) + Scalar(kQ, c, d);
    const Scalar cross(kQ, mpz_class(a) * d + mpz_class(c) * b, mpz_class(b) * d);
    CHECK(direct == cross);
  }
}

TEST_CASE("matrix construction rejects mixed fields") {
  std::vector<Scalar> entries{Scalar(kQ, 1), Scalar(kF3, 1)};
  CHECK_THROWS_AS(Matrix(kQ, 1, 2, entries), FieldMismatch);
  CHECK_THROWS_AS(Matrix(kQ, 2, 2, {Scalar(kQ, 1)}), DimensionMismatch);
}

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(kQ, 2));
  CHECK(id.reduced == Matrix::identity(kQ, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  const auto zero = rref(Matrix(kQ, 3, 2));
  CHECK(zero.reduced.is_zero());
  CHECK(zero.pivots.empty());

  const auto r = rref(Matrix::from_ints(kQ, {{2, 4}, {1, 2}}));
  CHECK(r.reduced == Matrix::from_ints(kQ, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(kQ, 4)) == 4);
  CHECK(rank(Matrix(kF3, 3, 5)) == 0);
  CHECK(rank(Matrix::from_ints(kQ, {{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(kQ, 3)).empty());
  const auto k0 = kernel_basis(Matrix(kQ, 2, 3));
  REQUIRE(k0.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(k0[i][j] == Scalar(kQ, i == j ? 1 : 0));
  }
  const auto k = kernel_basis(Matrix::from_ints(kF3, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{Scalar(kF3, 2), Scalar(kF3, 1)});
}

TEST_CASE("solve examples") {
  const Vector b{Scalar(kQ, 3), Scalar(kQ, -7)};
  CHECK(solve(Matrix::identity(kQ, 2), b) == b);
  CHECK_FALSE(solve(Matrix(kQ, 2, 2), b).has_value());
  const auto x = solve(Matrix::from_ints(kQ, {{1, 2}}), Vector{Scalar(kQ, 5)});
  REQUIRE(x);
  CHECK(*x == Vector{Scalar(kQ, 5), Scalar(kQ, 0)});
  CHECK_THROWS_AS(solve(Matrix::identity(kQ, 2), Vector{Scalar(kQ, 1)}), DimensionMismatch);
}

TEST_CASE("linear algebra properties on random matrices") {
  Rng rng(2024);
  const std::vector<FieldSpec> fields{kQ, FieldSpec::prime(2), kF3, FieldSpec::prime(7)};
  for (int trial = 0; trial < 300; ++trial) {
    const FieldSpec& f = fields[trial % fields.size()];
    const std::size_t rows = uniform_below(rng, 5);
    const std::size_t cols = uniform_below(rng, 5);
    // Low-rank products make rank deficiency common.
    const std::size_t inner = uniform_below(rng, 4);
    const Matrix m = random_matrix(f, rows, inner, rng) * random_matrix(f, inner, cols, rng);

    const auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    const std::size_t rk = rank(m);
    CHECK(rk <= std::min(rows, cols));
    CHECK(rk == rank(m.transpose()));
    CHECK(rk == oracle::rank(m));
    if (f.is_finite() && rows <= 4) CHECK(rk == oracle::brute_rank_fp(m));

    const auto ker = kernel_basis(m);
    CHECK(ker.size() == cols - rk);
    for (const auto& v : ker) CHECK(Matrix::column(v, f).is_zero() == false);
    for (const auto& v : ker) {
      const Vector mv = m * v;
      for (const auto& s : mv) CHECK(s.is_zero());
    }
    if (!ker.empty()) CHECK(rank(Matrix::from_rows(f, cols, ker)) == ker.size());

    // Consistent right-hand sides are always solvable.
    const Vector x0 = random_matrix(f, cols, 1, rng).column_vector(0);
    const Vector b = m * x0;
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
  }
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_ints(kQ, {{2, 1}, {1, 1}});
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(kQ, 2));
  CHECK_FALSE(inverse(Matrix::from_ints(kQ, {{1, 2}, {2, 4}})).has_value());
  CHECK(is_invertible(Matrix(kQ, 0, 0)));
}
