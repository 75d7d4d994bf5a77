#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "qgrass/field.hpp"

namespace qgrass {

// An exact element of a FieldSpec. Rationals are kept in lowest terms with
// positive denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals(), 0) {}
  Scalar(const FieldSpec& field, long value);
  // Rational a/b embedded into `field`; throws PreconditionError when b maps
  // to zero.
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den = 1);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Only valid for the matching field kind.
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  // Exact equality; scalars over different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  // Total order for use as map keys: field first, then value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qgrass
