#include <doctest.h>

#include <numeric>

#include <qgrass/errors.hpp>
#include <qgrass/encoder.hpp>
#include <qgrass/polynomial.hpp>

using namespace qgrass;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF3 = FieldSpec::prime(3);

Vector pt(const FieldSpec& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

Monomial mono(std::initializer_list<unsigned> e) { return Monomial{std::vector<unsigned>(e)}; }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("parse_poly transcribes terms") {
  const Polynomial p = parse_poly("T0*T2 - T1^2", 2, kQ);
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient(mono({1, 0, 1})) == Scalar(kQ, 1));
  CHECK(p.coefficient(mono({0, 2, 0})) == Scalar(kQ, -1));
  CHECK(p.to_string() == "T0*T2 - T1^2");

  CHECK(parse_poly("3*T0^2", 2, kF3).is_zero());
  CHECK(parse_poly("2*T0^2*T1 - T2^3", 2, kQ).coefficient(mono({2, 1, 0})) == Scalar(kQ, 2));
  CHECK(parse_poly("  -T0 + 5 ", 1, kQ).terms().size() == 2);
  CHECK(parse_poly("T0*T0", 1, kQ).coefficient(mono({2, 0})) == Scalar(kQ, 1));
}

TEST_CASE("parse_poly errors carry positions") {
  auto position_of = [](std::string_view text, std::size_t n) -> std::size_t {
    try {
      parse_poly(text, n, kQ);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("T0 + T3", 2) == 5);
  CHECK(position_of("T0 + ", 2) == 5);
  CHECK(position_of("T0 / 2", 2) == 3);
  CHECK(position_of("1.5*T0", 2) == 1);
  CHECK(position_of("T0 * x", 2) == 5);
  CHECK(position_of("T0^0", 2) == 3);
  CHECK(position_of("", 2) == 0);
  CHECK_THROWS_AS(parse_poly("T", 2, kQ), ParseError);
}

TEST_CASE("is_homogeneous") {
  CHECK(is_homogeneous(parse_poly("T0*T2 - T1^2", 2, kQ)) == 2u);
  CHECK(is_homogeneous(parse_poly("T0", 2, kQ)) == 1u);
  CHECK_FALSE(is_homogeneous(parse_poly("T0 + T1^2", 2, kQ)).has_value());
  CHECK_THROWS_AS(is_homogeneous(Polynomial(2, kQ)), PreconditionError);
}

TEST_CASE("normalize_degrees") {
  const Polynomial conic = parse_poly("T0*T2 - T1^2", 2, kQ);
  SUBCASE("powers up to the lcm") {
    const auto s = normalize_degrees({conic}, {parse_poly("T0", 2, kQ)});
    CHECK(s.degree == 2);
    CHECK(s.equations[0] == conic);
    CHECK(s.inequations[0] == parse_poly("T0^2", 2, kQ));
  }
  SUBCASE("equal degrees unchanged") {
    const auto h = parse_poly("T0^2 + T1*T2", 2, kQ);
    const auto s = normalize_degrees({conic}, {h});
    CHECK(s.degree == 2);
    CHECK(s.equations[0] == conic);
    CHECK(s.inequations[0] == h);
  }
  SUBCASE("lcm 6 with repetition") {
    const auto f2 = parse_poly("T0^3 - T1*T2^2", 2, kQ);
    const auto s = normalize_degrees({conic, f2}, {parse_poly("T1", 2, kQ)});
    CHECK(s.degree == 6);
    CHECK(s.equation_powers == std::vector<unsigned>{3, 2});
    CHECK(s.inequation_powers == std::vector<unsigned>{6});
    REQUIRE(s.inequations.size() == 2);
    CHECK(s.inequations[0] == s.inequations[1]);
    CHECK(s.equations[0] == conic.pow(3));
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(normalize_degrees({conic}, {conic.scaled(Scalar(kQ, -3))}), PreconditionError);
    // Only equal after normalization: T0^2 vs T0.
    CHECK_THROWS_AS(normalize_degrees({parse_poly("T0^2", 2, kQ)}, {parse_poly("T0", 2, kQ)}), PreconditionError);
    CHECK_THROWS_AS(normalize_degrees({}, {conic}), PreconditionError);
    CHECK_THROWS_AS(normalize_degrees({conic}, {}), PreconditionError);
    CHECK_THROWS_AS(normalize_degrees({parse_poly("T0 + T1^2", 2, kQ)}, {conic}), PreconditionError);
  }
  SUBCASE("projective mode substitutes coordinate powers") {
    const auto s = normalize_degrees({parse_poly("T0", 2, kQ)}, {}, {true});
    // T0 itself is dropped, T1 and T2 remain; T0 is repeated to match.
    CHECK(s.inequations.size() == 2);
    CHECK(s.equations.size() == 2);
  }
}

TEST_CASE("monomial_basis") {
  const auto b = monomial_basis(1, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == mono({2, 0}));
  CHECK(b[1] == mono({1, 1}));
  CHECK(b[2] == mono({0, 2}));
  CHECK(monomial_basis(2, 2).size() == 6);
  CHECK(monomial_basis(2, 1).size() == 3);
  CHECK(monomial_basis(3, 0).size() == 1);

  for (std::size_t n = 0; n <= 8; ++n) {
    for (unsigned d = 0; d <= 8; ++d) {
      const auto basis = monomial_basis(n, d);
      CHECK(basis.size() == binomial(n + d, n));
      CHECK(monomial_count(n, d) == basis.size());
      for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(MonomialOrder{}(basis[i], basis[i + 1]));
      for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis[i]) == i);
    }
  }
}

TEST_CASE("veronese examples") {
  const auto b12 = monomial_basis(1, 2);
  CHECK(veronese(pt(kQ, {1, 2}), b12) == pt(kQ, {1, 2, 4}));
  const auto b = monomial_basis(2, 3);
  const Vector e0 = veronese(pt(kQ, {1, 0, 0}), b);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(e0[i] == Scalar(kQ, i == 0 ? 1 : 0));
  const Vector ones = veronese(pt(kQ, {1, 1, 1}), monomial_basis(2, 2));
  CHECK(ones == Vector(6, Scalar(kQ, 1)));
  CHECK_THROWS_AS(veronese(pt(kQ, {0, 0}), b12), PreconditionError);
}

TEST_CASE("veronese_inverse") {
  const auto b12 = monomial_basis(1, 2);
  CHECK(veronese_inverse(veronese(pt(kQ, {1, 2}), b12), b12) == pt(kQ, {1, 2}));
  CHECK_FALSE(veronese_inverse(pt(kQ, {0, 1, 0}), b12).has_value());
  CHECK_FALSE(veronese_inverse(pt(kQ, {1, 1, 0}), b12).has_value());
  CHECK_THROWS_AS(veronese_inverse(pt(kQ, {0, 0, 0}), b12), PreconditionError);

  Rng rng(5);
  for (const FieldSpec& f : {kQ, FieldSpec::prime(5), FieldSpec::prime(7)}) {
    for (unsigned d = 1; d <= 3; ++d) {
      const auto basis = monomial_basis(2, d);
      for (int i = 0; i < 50; ++i) {
        Vector x = random_matrix(f, 3, 1, rng).column_vector(0);
        if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        Scalar c = random_scalar(f, rng);
        if (c.is_zero()) c = Scalar::one(f);
        Vector u = veronese(x, basis);
        for (auto& s : u) s *= c;
        const auto back = veronese_inverse(u, basis);
        REQUIRE(back);
        CHECK(*back == normalize_projective(x));
      }
    }
  }
}

TEST_CASE("evaluate") {
  const Polynomial conic = parse_poly("T0*T2 - T1^2", 2, kQ);
  CHECK(evaluate(conic, pt(kQ, {1, 1, 1})).is_zero());
  CHECK(evaluate(conic, pt(kQ, {1, 2, 3})) == Scalar(kQ, -1));
  CHECK(evaluate(parse_poly("T0^2", 2, kQ), pt(kQ, {0, 1, 5})).is_zero());
  CHECK_THROWS_AS(evaluate(conic, pt(kQ, {1, 2})), DimensionMismatch);
}

TEST_CASE("linearization identity") {
  Rng rng(99);
  for (const FieldSpec& f : {kQ, FieldSpec::prime(3), FieldSpec::prime(11)}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto basis = monomial_basis(3, d);
      for (int trial = 0; trial < 20; ++trial) {
        Polynomial p(3, f);
        for (const auto& m : basis.monomials()) p.add_term(m, random_scalar(f, rng));
        if (p.is_zero()) continue;
        Vector x = random_matrix(f, 4, 1, rng).column_vector(0);
        x[0] = Scalar::one(f);
        const Vector coeffs = coefficient_vector(p, basis);
        const Vector nu = veronese(x, basis);
        Scalar dot = Scalar::zero(f);
        for (std::size_t i = 0; i < nu.size(); ++i) dot += coeffs[i] * nu[i];
        CHECK(dot == evaluate(p, x));
      }
    }
  }
}

TEST_CASE("normalization keeps vanishing loci") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    const auto polys = {parse_poly("T0*T2 - T1^2", 2, f), parse_poly("T0^3 + T1^3 + T2^3", 2, f),
                        parse_poly("T1", 2, f)};
    for (const auto& poly : polys) {
      for (unsigned t = 1; t <= 4; ++t) {
        const Polynomial powered = poly.pow(t);
        for (const auto& x : projective_points(2, f)) {
          CHECK(evaluate(poly, x.coords()).is_zero() == evaluate(powered, x.coords()).is_zero());
        }
      }
    }
  }
}
