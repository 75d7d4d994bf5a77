#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgrass/matrix.hpp"

namespace qgrass {

// Exponent tuple (m_0, ..., m_n) of T_0^{m_0} ... T_n^{m_n}.
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  std::size_t variable_count() const { return exponents.size(); }
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// The global monomial order: descending lexicographic on exponent tuples.
// `MonomialOrder{}(a, b)` is true when a comes before b.
struct MonomialOrder {
  static constexpr const char* kId = "desc-lex";
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

// Polynomial in T_0..T_n over one field. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  Polynomial(std::size_t n, const FieldSpec& field) : n_(n), field_(field) {}

  // Power sum T_0^d + ... + T_n^d, and the single power T_j^d.
  static Polynomial power_sum(std::size_t n, unsigned d, const FieldSpec& field);
  static Polynomial variable_power(std::size_t n, std::size_t j, unsigned d, const FieldSpec& field);

  std::size_t n() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c * monomial; drops the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_;
  FieldSpec field_;
  Terms terms_;
};

// Parses text in the grammar
//   poly   := term (('+'|'-') term)*
//   term   := [int '*'] factor ('*' factor)* | int
//   factor := 'T' index ['^' posint]
// with insignificant whitespace. A leading sign on the first term is allowed.
// Throws ParseError (with byte position) on malformed input or an index > n.
Polynomial parse_poly(std::string_view text, std::size_t n, const FieldSpec& field);

// Common degree of all terms, or nullopt for mixed degrees. Throws
// PreconditionError on the zero polynomial.
std::optional<unsigned> is_homogeneous(const Polynomial& p);

Scalar evaluate(const Polynomial& p, const Vector& x);

// M_{n,d} in the global order with its index map.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, unsigned d);

  std::size_t n() const noexcept { return n_; }
  unsigned degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  // Position of m, or nullopt if m is not in the basis.
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  std::size_t n_;
  unsigned d_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, MonomialOrder> index_;
};

MonomialBasis monomial_basis(std::size_t n, unsigned d);

// binomial(n + d, n), the size of M_{n,d}.
std::size_t monomial_count(std::size_t n, unsigned d);

// Coefficients of a homogeneous p over `basis` (degree must match).
Vector coefficient_vector(const Polynomial& p, const MonomialBasis& basis);

struct NormalizeOptions {
  // With no inequations, substitute T_0^l, ..., T_n^l (minus any that are
  // scalar multiples of an equation) instead of rejecting.
  bool projective_mode = false;
};

struct NormalizedSystem {
  std::vector<Polynomial> equations;
  std::vector<Polynomial> inequations;
  unsigned degree = 0;
  // Exponents applied to each input: equations then inequations.
  std::vector<unsigned> equation_powers;
  std::vector<unsigned> inequation_powers;
};

// Raises every polynomial to a power so all share degree l = lcm of the
// input degrees, then pads the shorter list by cyclic repetition so both
// have the same length. Rejects an empty equation list, an empty inequation
// list (unless projective_mode), inhomogeneous input, and any inequation
// whose normalized form is a scalar multiple of a normalized equation.
NormalizedSystem normalize_degrees(const std::vector<Polynomial>& equations,
                                   const std::vector<Polynomial>& inequations,
                                   const NormalizeOptions& options = {});

// True iff p and q are nonzero and proportional (2 x N coefficient matrix has
// rank 1). Both must be homogeneous of the same degree.
bool is_scalar_multiple(const Polynomial& p, const Polynomial& q);

// x_m = prod x_j^{m_j} over the basis order. Throws on the zero point.
Vector veronese(const Vector& x, const MonomialBasis& basis);

// Normalizes x so the first nonzero coordinate is 1. Throws on zero.
Vector normalize_projective(const Vector& x);

// Recovers [x] from a vector proportional to veronese(x), verifying the
// proportionality; nullopt when u is not a Veronese point. Throws on zero u.
std::optional<Vector> veronese_inverse(const Vector& u, const MonomialBasis& basis);

}  // namespace qgrass
