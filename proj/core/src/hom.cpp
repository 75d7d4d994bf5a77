#include "qgrass/hom.hpp"

#include "qgrass/errors.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

namespace {

std::vector<std::size_t> unknown_offsets(const Representation& m, const Representation& n) {
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    offsets.push_back(off);
    off += m.dim(v) * n.dim(v);
  }
  offsets.push_back(off);
  return offsets;
}

}  // namespace

std::size_t hom_unknowns(const Representation& m, const Representation& n) {
  require_compatible(m, n, "hom");
  return unknown_offsets(m, n).back();
}

Matrix hom_system(const Representation& m, const Representation& n) {
  require_compatible(m, n, "hom");
  const auto offsets = unknown_offsets(m, n);
  const FieldSpec& field = m.field();
  const Quiver& q = m.quiver();

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);
  Matrix sys(field, equations, offsets.back());

  // Unknown (r, c) of phi_v lives at offsets[v] + r * dim M_v + c.
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    const std::size_t i = a.source;
    const std::size_t j = a.target;
    const Matrix& ma = m.map(k);
    const Matrix& na = n.map(k);
    for (std::size_t r = 0; r < n.dim(j); ++r) {
      for (std::size_t c = 0; c < m.dim(i); ++c, ++row) {
        // (phi_j M_a)[r][c] = sum_s phi_j[r][s] M_a[s][c]
        for (std::size_t s = 0; s < m.dim(j); ++s) {
          if (ma(s, c).is_zero()) continue;
          const std::size_t col = offsets[j] + r * m.dim(j) + s;
          sys.set(row, col, sys(row, col) + ma(s, c));
        }
        // -(N_a phi_i)[r][c] = -sum_s N_a[r][s] phi_i[s][c]
        for (std::size_t s = 0; s < n.dim(i); ++s) {
          if (na(r, s).is_zero()) continue;
          const std::size_t col = offsets[i] + s * m.dim(i) + c;
          sys.set(row, col, sys(row, col) - na(r, s));
        }
      }
    }
  }
  return sys;
}

HomBasis hom_basis(const Representation& m, const Representation& n) {
  const Matrix sys = hom_system(m, n);
  const auto offsets = unknown_offsets(m, n);
  HomBasis out;
  for (const auto& v : kernel_basis(sys)) {
    Morphism phi;
    for (std::size_t vert = 0; vert < m.quiver().vertex_count(); ++vert) {
      const std::size_t rows = n.dim(vert);
      const std::size_t cols = m.dim(vert);
      std::vector<Scalar> entries(v.begin() + static_cast<std::ptrdiff_t>(offsets[vert]),
                                  v.begin() + static_cast<std::ptrdiff_t>(offsets[vert] + rows * cols));
      phi.emplace_back(m.field(), rows, cols, std::move(entries));
    }
    out.morphisms.push_back(std::move(phi));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const Matrix sys = hom_system(m, n);
  return sys.cols() - rank(sys);
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  if (!m.quiver().is_acyclic()) throw PreconditionError("ext1_dim requires an acyclic quiver");
  const Matrix sys = hom_system(m, n);
  const std::size_t r = rank(sys);
  const std::size_t cokernel = sys.rows() - r;
  const long via_euler =
      static_cast<long>(sys.cols() - r) - euler_form(m.quiver(), m.dims(), n.dims());
  if (via_euler != static_cast<long>(cokernel)) {
    throw InternalInconsistency("ext1_dim: cokernel " + std::to_string(cokernel) + " != hom - euler " +
                                std::to_string(via_euler));
  }
  return cokernel;
}

int pdim(const Representation& m) {
  if (m.is_zero()) throw PreconditionError("pdim of the zero representation");
  if (!m.quiver().is_acyclic()) throw PreconditionError("pdim requires an acyclic quiver");
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    if (ext1_dim(m, Representation::simple(m.quiver(), m.field(), v)) != 0) return 1;
  }
  return 0;
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi) {
  require_compatible(m, n, "is_morphism");
  if (phi.size() != m.quiver().vertex_count()) return false;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[v].rows() != n.dim(v) || phi[v].cols() != m.dim(v)) return false;
  }
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    if (!(phi[a.target] * m.map(k) == n.map(k) * phi[a.source])) return false;
  }
  return true;
}

Morphism combine(const HomBasis& basis, const std::vector<Scalar>& coefficients) {
  if (coefficients.size() != basis.dimension()) throw DimensionMismatch("combine: coefficient count");
  if (basis.morphisms.empty()) throw PreconditionError("combine: empty basis");
  Morphism out;
  for (const auto& m : basis.morphisms.front()) out.emplace_back(m.field(), m.rows(), m.cols());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + basis.morphisms[k][v].scaled(coefficients[k]);
  }
  return out;
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (second.size() != first.size()) throw DimensionMismatch("compose: vertex count");
  Morphism out;
  for (std::size_t v = 0; v < first.size(); ++v) out.push_back(second[v] * first[v]);
  return out;
}

Morphism identity_morphism(const Representation& m) {
  Morphism out;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) out.push_back(Matrix::identity(m.field(), m.dim(v)));
  return out;
}

bool is_iso_morphism(const Morphism& phi) {
  for (const auto& m : phi) {
    if (!is_invertible(m)) return false;
  }
  return true;
}

}  // namespace qgrass
