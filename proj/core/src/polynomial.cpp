#include "qgrass/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "qgrass/errors.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

std::string Monomial::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  os << ')';
  return os.str();
}

Polynomial Polynomial::power_sum(std::size_t n, unsigned d, const FieldSpec& field) {
  Polynomial p(n, field);
  for (std::size_t j = 0; j <= n; ++j) {
    Monomial m{std::vector<unsigned>(n + 1, 0)};
    m.exponents[j] = d;
    p.add_term(m, Scalar::one(field));
  }
  return p;
}

Polynomial Polynomial::variable_power(std::size_t n, std::size_t j, unsigned d, const FieldSpec& field) {
  Polynomial p(n, field);
  Monomial m{std::vector<unsigned>(n + 1, 0)};
  m.exponents.at(j) = d;
  p.add_term(m, Scalar::one(field));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.variable_count() != n_ + 1) throw DimensionMismatch("monomial has wrong variable count");
  require_same_field(field_, c.field(), "Polynomial::add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_field(field_, o.field_, "Polynomial *");
  if (n_ != o.n_) throw DimensionMismatch("polynomials in different variable counts");
  Polynomial r(n_, field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (std::size_t j = 0; j <= n_; ++j) m.exponents[j] += mb.exponents[j];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(n_, field_);
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(n_, field_);
  r.add_term(Monomial{std::vector<unsigned>(n_ + 1, 0)}, Scalar::one(field_));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.field().is_rational() && c.rational() < 0) {
      negative = true;
      coeff = (-c).to_string();
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = m.degree() == 0;
    bool need_star = false;
    if (coeff != "1" || constant) {
      os << coeff;
      need_star = true;
    }
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      if (m.exponents[j] == 0) continue;
      if (need_star) os << '*';
      os << 'T' << j;
      if (m.exponents[j] > 1) os << '^' << m.exponents[j];
      need_star = true;
    }
  }
  return os.str();
}

std::optional<unsigned> is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no degree");
  const unsigned d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

Scalar evaluate(const Polynomial& p, const Vector& x) {
  if (x.size() != p.n() + 1) {
    throw DimensionMismatch("evaluate: point has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(p.n() + 1));
  }
  Scalar sum = Scalar::zero(p.field());
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (m.exponents[j] > 0) t *= x[j].pow(m.exponents[j]);
    }
    sum += t;
  }
  return sum;
}

MonomialBasis::MonomialBasis(std::size_t n, unsigned d) : n_(n), d_(d) {
  // Descending lexicographic: the first exponent runs from d down to 0.
  std::vector<unsigned> current(n + 1, 0);
  auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos == n) {
      current[pos] = remaining;
      monomials_.push_back(Monomial{current});
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  fill(fill, 0, d);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonomialBasis monomial_basis(std::size_t n, unsigned d) { return MonomialBasis(n, d); }

std::size_t monomial_count(std::size_t n, unsigned d) {
  // binomial(n + d, n) computed incrementally; each partial product is exact.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = c * (d + i) / i;
  return c;
}

Vector coefficient_vector(const Polynomial& p, const MonomialBasis& basis) {
  if (p.n() != basis.n()) throw DimensionMismatch("coefficient_vector: variable count mismatch");
  Vector v(basis.size(), Scalar::zero(p.field()));
  for (const auto& [m, c] : p.terms()) {
    auto idx = basis.index_of(m);
    if (!idx) {
      throw PreconditionError("coefficient_vector: term of degree " + std::to_string(m.degree()) +
                              " outside basis of degree " + std::to_string(basis.degree()));
    }
    v[*idx] = c;
  }
  return v;
}

bool is_scalar_multiple(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return false;
  const auto dp = is_homogeneous(p);
  const auto dq = is_homogeneous(q);
  if (!dp || !dq) throw PreconditionError("is_scalar_multiple expects homogeneous polynomials");
  if (*dp != *dq) return false;
  const MonomialBasis basis(p.n(), *dp);
  const Matrix m = Matrix::from_rows(p.field(), basis.size(),
                                     {coefficient_vector(p, basis), coefficient_vector(q, basis)});
  return rank(m) == 1;
}

namespace {

std::vector<unsigned> degrees_of(const std::vector<Polynomial>& ps, const char* what) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].is_zero()) {
      throw PreconditionError(std::string(what) + " " + std::to_string(i + 1) + " is the zero polynomial");
    }
    const auto d = is_homogeneous(ps[i]);
    if (!d) throw PreconditionError(std::string(what) + " " + std::to_string(i + 1) + " is not homogeneous");
    if (*d == 0) {
      throw PreconditionError(std::string(what) + " " + std::to_string(i + 1) + " has degree 0");
    }
    out.push_back(*d);
  }
  return out;
}

}  // namespace

NormalizedSystem normalize_degrees(const std::vector<Polynomial>& equations,
                                   const std::vector<Polynomial>& inequations,
                                   const NormalizeOptions& options) {
  if (equations.empty()) throw PreconditionError("at least one equation is required");
  if (inequations.empty() && !options.projective_mode) {
    throw PreconditionError("at least one inequation is required (or enable projective mode)");
  }
  const std::size_t n = equations.front().n();
  const FieldSpec field = equations.front().field();
  for (const auto& p : equations) {
    if (p.n() != n) throw DimensionMismatch("equations use different variable counts");
    require_same_field(field, p.field(), "normalize_degrees");
  }
  for (const auto& p : inequations) {
    if (p.n() != n) throw DimensionMismatch("inequations use different variable counts");
    require_same_field(field, p.field(), "normalize_degrees");
  }

  const auto fdeg = degrees_of(equations, "equation");
  const auto hdeg = degrees_of(inequations, "inequation");
  unsigned l = 1;
  for (unsigned d : fdeg) l = std::lcm(l, d);
  for (unsigned d : hdeg) l = std::lcm(l, d);

  NormalizedSystem out;
  out.degree = l;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    out.equation_powers.push_back(l / fdeg[i]);
    out.equations.push_back(equations[i].pow(l / fdeg[i]));
  }
  for (std::size_t j = 0; j < inequations.size(); ++j) {
    out.inequation_powers.push_back(l / hdeg[j]);
    out.inequations.push_back(inequations[j].pow(l / hdeg[j]));
  }

  if (inequations.empty()) {
    for (std::size_t j = 0; j <= n; ++j) {
      Polynomial h = Polynomial::variable_power(n, j, l, field);
      bool redundant = false;
      for (const auto& f : out.equations) redundant = redundant || is_scalar_multiple(h, f);
      if (!redundant) out.inequations.push_back(std::move(h));
    }
    if (out.inequations.empty()) {
      throw PreconditionError("projective mode: every coordinate power is a multiple of an equation");
    }
  } else {
    for (std::size_t j = 0; j < out.inequations.size(); ++j) {
      for (std::size_t i = 0; i < out.equations.size(); ++i) {
        if (is_scalar_multiple(out.inequations[j], out.equations[i])) {
          throw PreconditionError("inequation " + std::to_string(j + 1) +
                                  " is a scalar multiple of equation " + std::to_string(i + 1) +
                                  " (h_j must not be a scalar multiple of any f_i)");
        }
      }
    }
  }

  const std::size_t k = std::max(out.equations.size(), out.inequations.size());
  for (std::size_t i = out.equations.size(), base = out.equations.size(); i < k; ++i) {
    out.equations.push_back(out.equations[i % base]);
  }
  for (std::size_t j = out.inequations.size(), base = out.inequations.size(); j < k; ++j) {
    out.inequations.push_back(out.inequations[j % base]);
  }
  return out;
}

}  // namespace qgrass
