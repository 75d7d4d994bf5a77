#include "qgrass/extension.hpp"

#include "qgrass/errors.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

Extension build_extension(const Representation& sub, const Representation& quotient,
                          const std::vector<Matrix>& cocycle) {
  require_compatible(sub, quotient, "build_extension");
  const Quiver& q = sub.quiver();
  const FieldSpec& field = sub.field();
  if (cocycle.size() != q.arrow_count()) throw DimensionMismatch("build_extension: one cocycle block per arrow");

  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    const Matrix& z = cocycle[k];
    require_same_field(field, z.field(), "build_extension");
    if (z.rows() != sub.dim(a.target) || z.cols() != quotient.dim(a.source)) {
      throw DimensionMismatch("cocycle block for arrow '" + a.label + "' has the wrong shape");
    }
    Matrix b(field, sub.dim(a.target) + quotient.dim(a.target), sub.dim(a.source) + quotient.dim(a.source));
    b.paste(sub.map(k), 0, 0);
    b.paste(z, 0, sub.dim(a.source));
    b.paste(quotient.map(k), sub.dim(a.target), sub.dim(a.source));
    maps.push_back(std::move(b));
  }

  Extension ext{Representation(q, field, sub.dims() + quotient.dims(), std::move(maps)), {}, {}};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t ns = sub.dim(v), nq = quotient.dim(v);
    Matrix inc(field, ns + nq, ns);
    inc.paste(Matrix::identity(field, ns), 0, 0);
    Matrix proj(field, nq, ns + nq);
    proj.paste(Matrix::identity(field, nq), 0, ns);
    // Exactness at each vertex: inc injective, proj surjective, ker proj = im inc.
    if (rank(inc) != ns || rank(proj) != nq || !(proj * inc).is_zero()) {
      throw InternalInconsistency("build_extension: sequence not exact at vertex " + std::to_string(v));
    }
    ext.inclusion.push_back(std::move(inc));
    ext.projection.push_back(std::move(proj));
  }
  if (!is_morphism(sub, ext.middle, ext.inclusion) || !is_morphism(ext.middle, quotient, ext.projection)) {
    throw InternalInconsistency("build_extension: structure maps are not morphisms");
  }
  return ext;
}

std::vector<Matrix> coboundary(const Representation& sub, const Representation& quotient,
                               const std::vector<Matrix>& h) {
  require_compatible(sub, quotient, "coboundary");
  const Quiver& q = sub.quiver();
  if (h.size() != q.vertex_count()) throw DimensionMismatch("coboundary: one map per vertex");
  std::vector<Matrix> z;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    z.push_back(h[a.target] * quotient.map(k) - sub.map(k) * h[a.source]);
  }
  return z;
}

std::vector<Matrix> random_cocycle(const Representation& sub, const Representation& quotient, Rng& rng,
                                   long int_range) {
  require_compatible(sub, quotient, "random_cocycle");
  std::vector<Matrix> z;
  for (const auto& a : sub.quiver().arrows()) {
    z.push_back(random_matrix(sub.field(), sub.dim(a.target), quotient.dim(a.source), rng, int_range));
  }
  return z;
}

}  // namespace qgrass
