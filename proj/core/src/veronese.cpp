#include "qgrass/errors.hpp"
#include "qgrass/polynomial.hpp"

namespace qgrass {

namespace {

const FieldSpec& field_of(const Vector& v) {
  if (v.empty()) throw DimensionMismatch("empty coordinate vector");
  return v.front().field();
}

bool all_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

Vector veronese(const Vector& x, const MonomialBasis& basis) {
  if (x.size() != basis.n() + 1) throw DimensionMismatch("veronese: point length does not match basis");
  if (all_zero(x)) throw PreconditionError("veronese of the zero point");
  Vector out;
  out.reserve(basis.size());
  for (const auto& m : basis.monomials()) {
    Scalar v = Scalar::one(field_of(x));
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (m.exponents[j] > 0) v *= x[j].pow(m.exponents[j]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Vector normalize_projective(const Vector& x) {
  if (all_zero(x)) throw PreconditionError("projective point with all coordinates zero");
  std::size_t lead = 0;
  while (x[lead].is_zero()) ++lead;
  const Scalar inv = x[lead].inverse();
  Vector out;
  out.reserve(x.size());
  for (const auto& s : x) out.push_back(s * inv);
  return out;
}

std::optional<Vector> veronese_inverse(const Vector& u, const MonomialBasis& basis) {
  if (u.size() != basis.size()) throw DimensionMismatch("veronese_inverse: vector length does not match basis");
  if (all_zero(u)) throw PreconditionError("veronese_inverse of the zero vector");
  const unsigned d = basis.degree();
  if (d == 0) throw PreconditionError("veronese_inverse needs degree >= 1");
  const std::size_t vars = basis.n() + 1;
  const FieldSpec& field = field_of(u);

  auto at = [&](const std::vector<unsigned>& e) -> const Scalar& { return u[*basis.index_of(Monomial{e})]; };

  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<unsigned> pure(vars, 0);
    pure[j] = d;
    const Scalar& lead = at(pure);
    if (lead.is_zero()) continue;
    Vector x(vars, Scalar::zero(field));
    for (std::size_t i = 0; i < vars; ++i) {
      std::vector<unsigned> e(vars, 0);
      e[j] = d - 1;
      e[i] += 1;
      x[i] = at(e) / lead;
    }
    // u must equal lead * veronese(x) coordinate-wise.
    const Vector image = veronese(x, basis);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != lead * image[i]) return std::nullopt;
    }
    return normalize_projective(x);
  }
  return std::nullopt;
}

}  // namespace qgrass
