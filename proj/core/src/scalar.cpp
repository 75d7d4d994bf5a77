#include "qgrass/scalar.hpp"

#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

namespace {

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (field.is_rational()) {
    if (den == 0) throw PreconditionError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const auto p = field.characteristic();
    const auto d = reduce(den, p);
    if (d == 0) throw PreconditionError("denominator vanishes in " + field.to_string());
    value_ = mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p);
  }
}

bool Scalar::is_zero() const noexcept {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1 % field_.characteristic();
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_finite()) throw FieldMismatch("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(field_, o.field_, "Scalar +");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(field_, o.field_, "Scalar -");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(field_, o.field_, "Scalar *");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = mul_mod(v, std::get<std::uint32_t>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(field_, o.field_, "Scalar /");
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint32_t>(r.value_);
    v = pow_mod(v, p - 2, p);
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (field_.is_finite()) {
    Scalar r = *this;
    std::get<std::uint32_t>(r.value_) =
        pow_mod(std::get<std::uint32_t>(value_), e, field_.characteristic());
    return r;
  }
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.field_.characteristic() <=> b.field_.characteristic(); c != 0) return c;
  if (a.field_.is_finite()) {
    return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qgrass
