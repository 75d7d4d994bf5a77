#include "qgrass/subrep.hpp"

#include <limits>
#include <sstream>

#include "qgrass/errors.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

DimVector SubrepPoint::dims() const {
  DimVector d;
  for (const auto& b : bases) d.entries.push_back(b.rows());
  return d;
}

std::string SubrepPoint::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t v = 0; v < bases.size(); ++v) os << (v ? "," : "") << bases[v].to_string();
  os << '}';
  return os.str();
}

SubrepPoint make_subrep_point(const std::vector<Matrix>& spanning_rows) {
  SubrepPoint u;
  for (const auto& m : spanning_rows) u.bases.push_back(row_space_basis(m));
  return u;
}

namespace {

bool arrow_stable(const Matrix& map, const Matrix& source_basis, const Matrix& target_basis) {
  if (source_basis.rows() == 0) return true;
  const Matrix image = source_basis * map.transpose();
  if (target_basis.rows() == 0) return image.is_zero();
  return rank(vstack(target_basis, image)) == target_basis.rows();
}

void check_shape(const Representation& m, const SubrepPoint& u) {
  if (u.bases.size() != m.quiver().vertex_count()) throw DimensionMismatch("subrep point has wrong vertex count");
  for (std::size_t v = 0; v < u.bases.size(); ++v) {
    if (u.bases[v].cols() != m.dim(v)) throw DimensionMismatch("subrep basis width differs from ambient dimension");
    require_same_field(m.field(), u.bases[v].field(), "subrep");
  }
}

}  // namespace

bool is_stable(const Representation& m, const SubrepPoint& u) {
  check_shape(m, u);
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    if (!arrow_stable(m.map(k), u.bases[a.source], u.bases[a.target])) return false;
  }
  return true;
}

std::vector<SubrepPoint> enumerate_subreps(const Representation& m, const DimVector& e, std::uint64_t cap) {
  const std::size_t nv = m.quiver().vertex_count();
  if (e.size() != nv) throw DimensionMismatch("enumerate_subreps: dimension vector length");
  if (!m.field().is_finite()) throw PreconditionError("subrepresentation enumeration needs a finite field");
  if (!e.fits_in(m.dims())) return {};

  std::uint64_t product = 1;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::uint64_t c = gaussian_binomial(m.dim(v), e[v], m.field().characteristic());
    product = (c != 0 && product > std::numeric_limits<std::uint64_t>::max() / c) ? std::numeric_limits<std::uint64_t>::max()
                                                                                   : product * c;
  }
  if (product > cap) {
    throw CapExceeded("enumerating Gr(" + e.to_string() + ", " + m.dims().to_string() + ") needs " +
                      std::to_string(product) + " candidates, cap is " + std::to_string(cap));
  }

  std::vector<std::vector<Matrix>> candidates;
  for (std::size_t v = 0; v < nv; ++v) candidates.push_back(enumerate_subspaces(m.dim(v), e[v], m.field(), cap));

  // Arrows checked once both endpoints are assigned (vertices go in index order).
  std::vector<std::vector<std::size_t>> checks(nv);
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    checks[std::max(a.source, a.target)].push_back(k);
  }

  std::vector<SubrepPoint> out;
  SubrepPoint current;
  current.bases.resize(nv);
  auto descend = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      out.push_back(current);
      return;
    }
    for (const auto& basis : candidates[v]) {
      current.bases[v] = basis;
      bool ok = true;
      for (auto k : checks[v]) {
        const auto& a = m.quiver().arrow(k);
        if (!arrow_stable(m.map(k), current.bases[a.source], current.bases[a.target])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
  };
  descend(descend, 0);
  return out;
}

SubQuotient restrict_and_quotient(const Representation& m, const SubrepPoint& u) {
  check_shape(m, u);
  const FieldSpec& field = m.field();
  const std::size_t nv = m.quiver().vertex_count();

  std::vector<std::vector<std::size_t>> pivots(nv), complement(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& b = u.bases[v];
    if (!(row_space_basis(b) == b)) throw PreconditionError("subrep basis at vertex " + std::to_string(v) + " is not in rref");
    std::vector<bool> is_pivot(m.dim(v), false);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t c = 0;
      while (b(r, c).is_zero()) ++c;
      pivots[v].push_back(c);
      is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < m.dim(v); ++c)
      if (!is_pivot[c]) complement[v].push_back(c);
  }
  if (!is_stable(m, u)) throw PreconditionError("restrict_and_quotient: subspace is not stable");

  std::vector<Matrix> sub_maps, quot_maps;
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) {
    const auto& a = m.quiver().arrow(k);
    const Matrix& map = m.map(k);
    const Matrix& bt = u.bases[a.target];

    // Restriction: image of each source basis row, read off at target pivots.
    const Matrix& bs = u.bases[a.source];
    Matrix r(field, bt.rows(), bs.rows());
    for (std::size_t col = 0; col < bs.rows(); ++col) {
      const Vector y = map * bs.row_vector(col);
      for (std::size_t row = 0; row < bt.rows(); ++row) r.set(row, col, y[pivots[a.target][row]]);
    }
    sub_maps.push_back(std::move(r));

    // Quotient: image of each complement vector, reduced modulo U_target.
    Matrix q(field, complement[a.target].size(), complement[a.source].size());
    for (std::size_t col = 0; col < complement[a.source].size(); ++col) {
      Vector y = map.column_vector(complement[a.source][col]);
      for (std::size_t row = 0; row < bt.rows(); ++row) {
        const Scalar coeff = y[pivots[a.target][row]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = 0; c < y.size(); ++c) y[c] -= coeff * bt(row, c);
      }
      for (std::size_t row = 0; row < complement[a.target].size(); ++row) q.set(row, col, y[complement[a.target][row]]);
    }
    quot_maps.push_back(std::move(q));
  }

  DimVector sub_dims = u.dims();
  DimVector quot_dims = m.dims() - sub_dims;
  return {Representation(m.quiver(), field, std::move(sub_dims), std::move(sub_maps)),
          Representation(m.quiver(), field, std::move(quot_dims), std::move(quot_maps))};
}

}  // namespace qgrass
