#include <doctest.h>

#include <algorithm>
#include <set>

#include <qgrass/encoder.hpp>
#include <qgrass/errors.hpp>
#include <qgrass/hom.hpp>
#include <qgrass/isomorphism.hpp>
#include <qgrass/linalg.hpp>

#include "support/oracles.hpp"

using namespace qgrass;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, std::size_t n, const FieldSpec& f) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(t, n, f));
  return out;
}

EncodedInstance conic(const FieldSpec& f, std::initializer_list<const char*> hs = {"T0"}) {
  return encode(polys({"T0*T2 - T1^2"}, 2, f), polys(hs, 2, f));
}

ProjPoint pt(const FieldSpec& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return ProjPoint(v);
}

Vector ones(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::one(f)); }

std::set<std::string> point_set(const std::vector<ProjPoint>& pts) {
  std::set<std::string> out;
  for (const auto& p : pts) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("ProjPoint normalization") {
  CHECK(pt(kF5, {0, 2, 4}).to_string() == "[0:1:2]");
  CHECK(pt(kQ, {2, 4}) == pt(kQ, {1, 2}));
  CHECK_THROWS_AS(pt(kF3, {0, 3}), PreconditionError);
}

TEST_CASE("projective_points") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (unsigned n = 1; n <= 3; ++n) {
      std::set<oracle::FpVec> got;
      for (const auto& x : projective_points(n, f)) got.insert(oracle::to_fp(x.coords()));
      CHECK(got == oracle::brute_projective_points(n, p));
    }
  }
  CHECK_THROWS_AS(projective_points(2, kQ), PreconditionError);
  CHECK_THROWS_AS(projective_points(8, kF5, 1000), CapExceeded);
}

TEST_CASE("encode examples") {
  const auto inst = conic(kF3);
  CHECK(inst.n == 2);
  CHECK(inst.k == 1);
  CHECK(inst.degree == 2);
  CHECK(inst.v.dims() == DimVector({1, 6, 3}));
  CHECK(inst.w.dims() == DimVector({1, 6, 3}));
  CHECK(inst.f_arrows.size() == 1);
  CHECK(inst.g_arrows.size() == 3);
  CHECK(inst.quiver.arrows_between(1, 0) == 1);
  CHECK(inst.quiver.arrows_between(1, 2) == 3);
  CHECK(inst.quiver.arrow(inst.f_arrows[0]).label == "f1");
  CHECK(inst.quiver.arrow(inst.g_arrows[2]).label == "g2");
  // f row = coefficients of T0*T2 - T1^2 over (T0^2, T0T1, T0T2, T1^2, T1T2, T2^2).
  CHECK(inst.v.map(inst.f_arrows[0]) == Matrix::from_ints(kF3, {{0, 0, 1, -1, 0, 0}}));
  CHECK(inst.w.map(inst.f_arrows[0]) == Matrix::from_ints(kF3, {{1, 0, 0, 0, 0, 0}}));

  const auto lin = encode(polys({"T0"}, 2, kQ), polys({"T1"}, 2, kQ));
  CHECK(lin.degree == 1);
  CHECK(lin.v.dims() == DimVector({1, 3, 1}));
  for (std::size_t j = 0; j < 3; ++j) {
    Matrix ind(kQ, 1, 3);
    ind.set(0, j, Scalar::one(kQ));
    CHECK(lin.v.map(lin.g_arrows[j]) == ind);
  }

  const auto rep = encode(polys({"T0*T2 - T1^2", "T0*T1"}, 2, kF3), polys({"T2^2"}, 2, kF3));
  CHECK(rep.k == 2);
  CHECK(rep.normalized.inequations.size() == 2);
  CHECK(rep.normalized.inequations[0] == rep.normalized.inequations[1]);

  CHECK_THROWS_AS(encode(polys({"T0*T2 - T1^2"}, 2, kF3), polys({"2*T0*T2 - 2*T1^2"}, 2, kF3)), PreconditionError);
  CHECK_THROWS_AS(encode(polys({"T0*T2 - T1^2"}, 2, kF3), {}), PreconditionError);
  CHECK_THROWS_AS(encode({}, polys({"T0"}, 2, kF3)), PreconditionError);
}

TEST_CASE("structural invariants of V and W") {
  for (const FieldSpec& f : {kQ, kF2, kF3, kF5}) {
    const auto inst = conic(f, {"T0", "T1"});
    for (std::size_t a = 0; a < inst.quiver.arrow_count(); ++a) {
      const bool is_f = std::find(inst.f_arrows.begin(), inst.f_arrows.end(), a) != inst.f_arrows.end();
      if (!is_f) CHECK(inst.v.map(a) == inst.w.map(a));
    }
    for (std::size_t j = 0; j <= inst.n; ++j) {
      const Matrix& g = inst.v.map(inst.g_arrows[j]);
      for (std::size_t c = 0; c < inst.basis.size(); ++c) {
        const Monomial& m = inst.basis[c];
        for (std::size_t r = 0; r < inst.lower_basis.size(); ++r) {
          Monomial shifted = m;
          bool expected = false;
          if (m.exponents[j] > 0) {
            --shifted.exponents[j];
            expected = shifted == inst.lower_basis[r];
          }
          CHECK(g(r, c).is_one() == expected);
          CHECK((g(r, c).is_zero() || g(r, c).is_one()));
        }
      }
    }
  }
}

TEST_CASE("g-identity and linearization on the arrow matrices") {
  Rng rng(3);
  for (const FieldSpec& f : {kQ, kF3, kF5}) {
    const auto inst = encode(polys({"T0*T2 - T1^2", "T0^3 - T1*T2^2 + 2*T0*T1*T2"}, 2, f),
                             polys({"T0 + T1", "T2^2 - T0*T1"}, 2, f));
    for (int trial = 0; trial < 40; ++trial) {
      Vector x;
      for (std::size_t i = 0; i <= inst.n; ++i) x.push_back(random_scalar(f, rng));
      if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      const Vector top = veronese(x, inst.basis);
      const Vector low = veronese(x, inst.lower_basis);
      for (std::size_t j = 0; j <= inst.n; ++j) {
        const Vector got = inst.v.map(inst.g_arrows[j]) * top;
        for (std::size_t r = 0; r < low.size(); ++r) CHECK(got[r] == x[j] * low[r]);
      }
      for (std::size_t i = 0; i < inst.k; ++i) {
        CHECK((inst.v.map(inst.f_arrows[i]) * top)[0] == evaluate(inst.normalized.equations[i], x));
        CHECK((inst.w.map(inst.f_arrows[i]) * top)[0] == evaluate(inst.normalized.inequations[i], x));
      }
    }
  }
}

TEST_CASE("V and W are bricks with no maps between them") {
  const std::vector<EncodedInstance> corpus = {
      conic(kF3), conic(kF5), conic(kQ), conic(kF2, {"T0", "T1", "T2"}),
      encode(polys({"T0*T3 - T1*T2"}, 3, kF2), polys({"T0"}, 3, kF2)),
      encode(polys({"T0"}, 1, kF3), polys({"T1"}, 1, kF3)),
      encode(polys({"T0^2 + T1^2 + T2^2"}, 2, kQ), polys({"T0*T1"}, 2, kQ)),
  };
  for (const auto& inst : corpus) {
    CHECK(hom_dim(inst.v, inst.w) == 0);
    CHECK(hom_dim(inst.w, inst.v) == 0);
    CHECK(hom_dim(inst.v, inst.v) == 1);
    CHECK(hom_dim(inst.w, inst.w) == 1);
    CHECK(verify_lemma_hom(inst).part_i);
  }
}

TEST_CASE("build_ux") {
  const auto inst = conic(kQ);
  const auto u = build_ux(inst, pt(kQ, {1, 0, 0}));
  CHECK(u.dims() == DimVector({0, 1, 1}));
  CHECK(u.dims().is_thin());
  CHECK(u.map(inst.g_arrows[0]) == Matrix::from_ints(kQ, {{1}}));
  CHECK(u.map(inst.g_arrows[1]).is_zero());
  CHECK(u.map(inst.g_arrows[2]).is_zero());
  CHECK(u.map(inst.f_arrows[0]).rows() == 0);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x;
    for (int i = 0; i < 3; ++i) x.push_back(random_scalar(kQ, rng));
    if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    const auto ux = build_ux(inst, ProjPoint(x));
    CHECK(hom_dim(ux, ux) == 1);
  }
}

TEST_CASE("point_to_subrep and subrep_to_point") {
  const auto inst = conic(kQ);
  const auto u = point_to_subrep(inst, pt(kQ, {1, 1, 1}));
  CHECK(u.bases[0].rows() == 0);
  CHECK(u.bases[1] == Matrix::row(ones(kQ, 6), kQ));
  CHECK(u.bases[2] == Matrix::row(ones(kQ, 3), kQ));
  CHECK_THROWS_AS(point_to_subrep(inst, pt(kQ, {1, 2, 3})), PreconditionError);
  const auto e0 = point_to_subrep(inst, pt(kQ, {1, 0, 0}));
  CHECK(e0.bases[1] == Matrix::from_ints(kQ, {{1, 0, 0, 0, 0, 0}}));
  CHECK(subrep_to_point(inst, u) == pt(kQ, {1, 1, 1}));

  // A line at vertex 2 that is no Veronese point.
  const auto fake = make_subrep_point({Matrix(kQ, 0, 1), Matrix::from_ints(kQ, {{0, 1, 0, 0, 0, 0}}),
                                       Matrix::from_ints(kQ, {{1, 0, 0}})});
  CHECK_FALSE(subrep_to_point(inst, fake).has_value());
  CHECK_THROWS_AS(subrep_to_point(inst, make_subrep_point({Matrix(kQ, 0, 1), Matrix(kQ, 0, 6), Matrix(kQ, 0, 3)})),
                  DimensionMismatch);

  for (const FieldSpec& f : {kF3, kF5}) {
    const auto fi = conic(f);
    for (const auto& x : variety_points(fi)) CHECK(subrep_to_point(fi, point_to_subrep(fi, x)) == x);
    std::set<std::string> decoded;
    for (const auto& s : enumerate_subreps(fi.v, fi.point_dims())) {
      const auto x = subrep_to_point(fi, s);
      REQUIRE(x);
      decoded.insert(x->to_string());
    }
    CHECK(decoded == point_set(variety_points(fi)));
  }
}

TEST_CASE("variety points against brute enumeration") {
  const auto inst = conic(kF3);
  std::set<std::string> expected;
  for (const auto& v : oracle::brute_projective_points(2, 3)) {
    Vector x;
    for (auto c : v) x.emplace_back(kF3, static_cast<long>(c));
    if (evaluate(inst.input_equations[0], x).is_zero()) expected.insert(ProjPoint(x).to_string());
  }
  CHECK(point_set(variety_points(inst)) == expected);
  CHECK(expected.size() == 4);
}

TEST_CASE("verify_bijection examples") {
  auto r = verify_bijection(conic(kF3));
  CHECK(r.matched);
  CHECK(r.grass_count == 4);
  CHECK(r.variety_count == 4);
  r = verify_bijection(conic(kF5));
  CHECK(r.matched);
  CHECK(r.grass_count == 6);
  r = verify_bijection(encode(polys({"T0"}, 1, kF3), polys({"T1"}, 1, kF3)));
  CHECK(r.matched);
  CHECK(r.grass_count == 1);
  CHECK_THROWS_AS(verify_bijection(conic(kQ)), PreconditionError);
}

TEST_CASE("verify_lemma_hom examples") {
  const auto inst = conic(kF3);
  const auto r = verify_lemma_hom(inst);
  CHECK(r.part_i);
  CHECK(r.ran_part_ii);
  CHECK(r.part_ii);
  CHECK(r.violations.empty());
  CHECK(r.table[0][0] == 3);  // hom 0, h nonzero
  CHECK(r.table[1][1] == 1);  // hom nonzero, h zero: [0:0:1]
  CHECK(r.table[0][1] == 0);
  CHECK(r.table[1][0] == 0);
  CHECK(hom_dim(build_ux(inst, pt(kF3, {0, 0, 1})), inst.w) >= 1);
  const auto rq = verify_lemma_hom(conic(kQ));
  CHECK(rq.part_i);
  CHECK_FALSE(rq.ran_part_ii);
}

TEST_CASE("verify_quasi_projective examples") {
  auto r = verify_quasi_projective(conic(kF3));
  CHECK(r.matched);
  CHECK(r.ambient_in_e);
  CHECK(r.quotient_outside_e.empty());
  CHECK(r.grass_count == 3);
  CHECK(r.open_count == 3);
  r = verify_quasi_projective(conic(kF5));
  CHECK(r.matched);
  CHECK(r.grass_count == 5);
  r = verify_quasi_projective(conic(kF3, {"T0", "T1", "T2"}));
  CHECK(r.matched);
  CHECK(r.grass_count == 4);
}

TEST_CASE("counts are invariant under permuting and scaling the inputs") {
  const FieldSpec f = kF3;
  const auto base = encode(polys({"T0*T2 - T1^2", "T0*T1 - T1^2"}, 2, f), polys({"T0", "T2"}, 2, f));
  const auto permuted = encode(polys({"T0*T1 - T1^2", "T0*T2 - T1^2"}, 2, f), polys({"T2", "T0"}, 2, f));
  const auto scaled = encode(polys({"2*T0*T2 - 2*T1^2", "T0*T1 - T1^2"}, 2, f), polys({"T0", "2*T2"}, 2, f));
  const auto b0 = verify_bijection(base);
  const auto q0 = verify_quasi_projective(base);
  CHECK(b0.matched);
  CHECK(q0.matched);
  for (const auto* other : {&permuted, &scaled}) {
    const auto b = verify_bijection(*other);
    const auto q = verify_quasi_projective(*other);
    CHECK(b.matched);
    CHECK(q.matched);
    CHECK(b.grass_count == b0.grass_count);
    CHECK(q.grass_count == q0.grass_count);
    CHECK(point_set(variety_points(*other)) == point_set(variety_points(base)));
  }
}
