#include "qgrass/isomorphism.hpp"

#include <limits>

namespace qgrass {

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic:
      return "isomorphic";
    case IsoVerdict::NotIsomorphic:
      return "not-isomorphic";
    case IsoVerdict::ProbablyNotIsomorphic:
      return "probably-not-isomorphic";
  }
  return "?";
}

namespace {

// p^k, or nullopt once it passes `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t k, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  return v;
}

}  // namespace

IsoResult are_isomorphic(const Representation& m, const Representation& n, const IsoOptions& options) {
  require_compatible(m, n, "are_isomorphic");
  if (m.dims() != n.dims()) return {IsoVerdict::NotIsomorphic, std::nullopt};
  if (m.is_zero()) return {IsoVerdict::Isomorphic, identity_morphism(m)};

  // Isomorphic modules have Hom spaces of equal dimension in every slot.
  const std::size_t end_m = hom_dim(m, m);
  if (hom_dim(n, n) != end_m || hom_dim(n, m) != end_m) return {IsoVerdict::NotIsomorphic, std::nullopt};
  const HomBasis basis = hom_basis(m, n);
  if (basis.dimension() != end_m) return {IsoVerdict::NotIsomorphic, std::nullopt};

  const FieldSpec& field = m.field();
  Rng rng(options.seed);
  std::vector<Scalar> coeffs(basis.dimension(), Scalar::zero(field));
  for (std::size_t t = 0; t < options.random_trials; ++t) {
    for (auto& c : coeffs) c = random_scalar(field, rng, options.int_range);
    Morphism phi = combine(basis, coeffs);
    if (is_iso_morphism(phi)) return {IsoVerdict::Isomorphic, std::move(phi)};
  }

  if (field.is_finite()) {
    const std::uint64_t p = field.characteristic();
    if (bounded_power(p, basis.dimension(), options.exhaustive_limit)) {
      std::vector<std::uint32_t> digits(basis.dimension(), 0);
      for (;;) {
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;  // back to all zeros
        for (std::size_t i = 0; i < digits.size(); ++i) coeffs[i] = Scalar(field, static_cast<long>(digits[i]));
        Morphism phi = combine(basis, coeffs);
        if (is_iso_morphism(phi)) return {IsoVerdict::Isomorphic, std::move(phi)};
      }
      return {IsoVerdict::NotIsomorphic, std::nullopt};
    }
  }
  return {IsoVerdict::ProbablyNotIsomorphic, std::nullopt};
}

}  // namespace qgrass
