#include "qgrass/encoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qgrass/errors.hpp"
#include "qgrass/hom.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

ProjPoint::ProjPoint(const Vector& coords) : coords_(normalize_projective(coords)) {}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i];
  os << ']';
  return os.str();
}

std::vector<ProjPoint> projective_points(std::size_t n, const FieldSpec& field, std::uint64_t cap) {
  if (!field.is_finite()) throw PreconditionError("projective point enumeration needs a finite field");
  const std::uint64_t p = field.characteristic();
  const std::uint64_t count = gaussian_binomial(n + 1, 1, p);
  if (count > cap) {
    throw CapExceeded("P^" + std::to_string(n) + "(" + field.to_string() + ") has " + std::to_string(count) +
                      " points, cap is " + std::to_string(cap));
  }
  std::vector<ProjPoint> out;
  out.reserve(count);
  // Leading 1 at position `lead`; zeros before; free coordinates after.
  for (std::size_t lead = n + 1; lead-- > 0;) {
    const std::size_t free = n - lead;
    std::vector<std::uint32_t> digits(free, 0);
    for (;;) {
      Vector x(n + 1, Scalar::zero(field));
      x[lead] = Scalar::one(field);
      for (std::size_t i = 0; i < free; ++i) x[lead + 1 + i] = Scalar(field, static_cast<long>(digits[i]));
      out.emplace_back(x);
      std::size_t i = free;
      while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EncodedInstance encode(const std::vector<Polynomial>& equations, const std::vector<Polynomial>& inequations,
                       const EncodeOptions& options) {
  EncodedInstance inst;
  inst.normalized = normalize_degrees(equations, inequations, {options.projective_mode});
  inst.input_equations = equations;
  inst.input_inequations = inequations;
  inst.field = equations.front().field();
  inst.n = equations.front().n();
  inst.k = inst.normalized.equations.size();
  inst.degree = inst.normalized.degree;
  if (inst.degree == 0) throw PreconditionError("encode: normalized degree is 0");
  inst.basis = monomial_basis(inst.n, inst.degree);
  inst.lower_basis = monomial_basis(inst.n, inst.degree - 1);

  const std::size_t big = inst.basis.size();
  const std::size_t small = inst.lower_basis.size();
  const FieldSpec& field = inst.field;

  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < inst.k; ++i) {
    inst.f_arrows.push_back(arrows.size());
    arrows.push_back({EncodedInstance::kVertexTwo, EncodedInstance::kVertexOne, "f" + std::to_string(i + 1)});
  }
  for (std::size_t j = 0; j <= inst.n; ++j) {
    inst.g_arrows.push_back(arrows.size());
    arrows.push_back({EncodedInstance::kVertexTwo, EncodedInstance::kVertexThree, "g" + std::to_string(j)});
  }
  inst.quiver = Quiver(3, std::move(arrows));

  // g_j sends v_m to v_{m - e_j} when m_j > 0 and to 0 otherwise.
  std::vector<Matrix> g;
  for (std::size_t j = 0; j <= inst.n; ++j) {
    Matrix gj(field, small, big);
    for (std::size_t col = 0; col < big; ++col) {
      Monomial m = inst.basis[col];
      if (m.exponents[j] == 0) continue;
      --m.exponents[j];
      gj.set(*inst.lower_basis.index_of(m), col, Scalar::one(field));
    }
    g.push_back(std::move(gj));
  }

  auto build = [&](const std::vector<Polynomial>& polys) {
    std::vector<Matrix> maps;
    for (const auto& p : polys) maps.push_back(Matrix::row(coefficient_vector(p, inst.basis), field));
    maps.insert(maps.end(), g.begin(), g.end());
    return Representation(inst.quiver, field, DimVector({1, big, small}), std::move(maps));
  };
  inst.v = build(inst.normalized.equations);
  inst.w = build(inst.normalized.inequations);
  return inst;
}

Representation build_ux(const EncodedInstance& inst, const ProjPoint& x) {
  if (x.coords().size() != inst.n + 1) throw DimensionMismatch("build_ux: point has the wrong length");
  require_same_field(inst.field, x.coords().front().field(), "build_ux");
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < inst.k; ++i) maps.emplace_back(inst.field, 0, 1);
  for (std::size_t j = 0; j <= inst.n; ++j) maps.push_back(Matrix(inst.field, 1, 1, {x.coords()[j]}));
  return Representation(inst.quiver, inst.field, inst.point_dims(), std::move(maps));
}

bool on_variety(const EncodedInstance& inst, const ProjPoint& x) {
  return std::all_of(inst.input_equations.begin(), inst.input_equations.end(),
                     [&](const Polynomial& f) { return evaluate(f, x.coords()).is_zero(); });
}

bool in_open_part(const EncodedInstance& inst, const ProjPoint& x) {
  if (!on_variety(inst, x)) return false;
  const auto& hs = inst.input_inequations.empty() ? inst.normalized.inequations : inst.input_inequations;
  return std::any_of(hs.begin(), hs.end(), [&](const Polynomial& h) { return !evaluate(h, x.coords()).is_zero(); });
}

SubrepPoint point_to_subrep(const EncodedInstance& inst, const ProjPoint& x) {
  for (std::size_t i = 0; i < inst.normalized.equations.size(); ++i) {
    if (!evaluate(inst.normalized.equations[i], x.coords()).is_zero()) {
      throw PreconditionError("point " + x.to_string() + " is not on the variety: f" + std::to_string(i + 1) +
                              "(x) != 0");
    }
  }
  SubrepPoint u;
  u.bases.emplace_back(inst.field, 0, 1);
  u.bases.push_back(row_space_basis(Matrix::row(veronese(x.coords(), inst.basis), inst.field)));
  u.bases.push_back(row_space_basis(Matrix::row(veronese(x.coords(), inst.lower_basis), inst.field)));
  if (!is_stable(inst.v, u)) {
    throw InternalInconsistency("point_to_subrep: Veronese lines of " + x.to_string() + " are not stable");
  }
  return u;
}

std::optional<ProjPoint> subrep_to_point(const EncodedInstance& inst, const SubrepPoint& u) {
  if (u.dims() != inst.point_dims()) {
    throw DimensionMismatch("subrep_to_point: expected dimension vector (0,1,1), got " + u.dims().to_string());
  }
  auto x = veronese_inverse(u.bases[EncodedInstance::kVertexTwo].row_vector(0), inst.basis);
  if (!x) return std::nullopt;
  return ProjPoint(*x);
}

std::vector<ProjPoint> variety_points(const EncodedInstance& inst, std::uint64_t cap) {
  std::vector<ProjPoint> out;
  for (auto& x : projective_points(inst.n, inst.field, cap)) {
    if (on_variety(inst, x)) out.push_back(std::move(x));
  }
  return out;
}

BijectionReport verify_bijection(const EncodedInstance& inst, std::uint64_t cap) {
  BijectionReport report;
  const auto subs = enumerate_subreps(inst.v, inst.point_dims(), cap);
  const auto variety = variety_points(inst, cap);
  report.grass_count = subs.size();
  report.variety_count = variety.size();

  std::set<ProjPoint> decoded;
  for (const auto& u : subs) {
    auto x = subrep_to_point(inst, u);
    if (!x) {
      report.undecodable.push_back(u);
      continue;
    }
    if (!on_variety(inst, *x)) report.off_variety.push_back(*x);
    if (!decoded.insert(*x).second) report.duplicates.push_back(*x);
  }
  for (const auto& x : variety) {
    if (!decoded.count(x)) report.missing.push_back(x);
  }
  report.matched = report.undecodable.empty() && report.off_variety.empty() && report.duplicates.empty() &&
                   report.missing.empty() && report.grass_count == report.variety_count;
  return report;
}

LemmaHomReport verify_lemma_hom(const EncodedInstance& inst, std::uint64_t cap) {
  LemmaHomReport report;
  report.hom_v_w = hom_dim(inst.v, inst.w);
  report.hom_w_v = hom_dim(inst.w, inst.v);
  report.end_v = hom_dim(inst.v, inst.v);
  report.end_w = hom_dim(inst.w, inst.w);
  report.part_i = report.hom_v_w == 0 && report.hom_w_v == 0 && report.end_v == 1 && report.end_w == 1;

  if (inst.field.is_finite()) {
    report.ran_part_ii = true;
    for (const auto& x : variety_points(inst, cap)) {
      const bool hom_zero = hom_dim(build_ux(inst, x), inst.w) == 0;
      bool some_h = false;
      for (const auto& h : inst.normalized.inequations) some_h = some_h || !evaluate(h, x.coords()).is_zero();
      ++report.table[hom_zero ? 0 : 1][some_h ? 0 : 1];
      if (hom_zero != some_h) report.violations.push_back(x);
    }
    report.part_ii = report.violations.empty();
  }
  return report;
}

QuasiProjectiveReport verify_quasi_projective(const EncodedInstance& inst, std::uint64_t cap) {
  QuasiProjectiveReport report;
  const SubcatPredicate e = inst.perp_w();
  report.ambient_in_e = member(e, inst.v);

  for (const auto& u : enumerate_subreps(inst.v, inst.point_dims(), cap)) {
    ++report.subreps_checked;
    if (!member(e, restrict_and_quotient(inst.v, u).quotient)) report.quotient_outside_e.push_back(u);
  }

  std::set<ProjPoint> grass;
  if (report.ambient_in_e) {
    for (const auto& u : exact_grassmannian_points(inst.v, inst.point_dims(), e, cap)) {
      auto x = subrep_to_point(inst, u);
      if (!x) throw InternalInconsistency("verify_quasi_projective: undecodable subrep " + u.to_string());
      grass.insert(*x);
      ++report.grass_count;
    }
  }

  std::set<ProjPoint> open;
  for (const auto& x : variety_points(inst, cap)) {
    if (in_open_part(inst, x)) open.insert(x);
  }
  report.open_count = open.size();
  std::set_symmetric_difference(grass.begin(), grass.end(), open.begin(), open.end(),
                                std::back_inserter(report.mismatches));
  report.matched = report.ambient_in_e && report.mismatches.empty() && report.grass_count == report.open_count &&
                   report.quotient_outside_e.empty();
  return report;
}

}  // namespace qgrass
