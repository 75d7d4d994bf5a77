#include "qgrass/representation.hpp"

#include <map>
#include <sstream>

#include "qgrass/errors.hpp"
#include "qgrass/linalg.hpp"

namespace qgrass {

Representation::Representation(Quiver quiver, FieldSpec field, DimVector dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertex_count()) {
    throw DimensionMismatch("dimension vector " + dims_.to_string() + " does not match " +
                            std::to_string(quiver_.vertex_count()) + " vertices");
  }
  if (maps_.size() != quiver_.arrow_count()) {
    throw DimensionMismatch("expected " + std::to_string(quiver_.arrow_count()) + " arrow matrices, got " +
                            std::to_string(maps_.size()));
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_.arrow(a);
    const auto& m = maps_[a];
    require_same_field(field_, m.field(), "Representation");
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source]) {
      throw DimensionMismatch("arrow '" + arrow.label + "' matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(dims_[arrow.target]) +
                              "x" + std::to_string(dims_[arrow.source]));
    }
  }
}

Representation Representation::zero_maps(const Quiver& quiver, const FieldSpec& field, const DimVector& dims) {
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows()) maps.emplace_back(field, dims.entries.at(a.target), dims.entries.at(a.source));
  return Representation(quiver, field, dims, std::move(maps));
}

Representation Representation::zero(const Quiver& quiver, const FieldSpec& field) {
  return zero_maps(quiver, field, DimVector::zero(quiver.vertex_count()));
}

Representation Representation::simple(const Quiver& quiver, const FieldSpec& field, std::size_t vertex) {
  return zero_maps(quiver, field, DimVector::unit(quiver.vertex_count(), vertex));
}

Representation Representation::projective(const Quiver& quiver, const FieldSpec& field, std::size_t vertex) {
  if (!quiver.is_acyclic()) throw PreconditionError("projective(): quiver must be acyclic");
  if (vertex >= quiver.vertex_count()) throw PreconditionError("projective(): vertex out of range");

  // Paths from `vertex` as arrow sequences; the trivial path is empty.
  using Path = std::vector<std::size_t>;
  std::vector<std::vector<Path>> at(quiver.vertex_count());
  std::map<Path, std::size_t> position;
  std::vector<std::pair<Path, std::size_t>> frontier{{Path{}, vertex}};
  while (!frontier.empty()) {
    auto [path, end] = frontier.back();
    frontier.pop_back();
    position[path] = at[end].size();
    at[end].push_back(path);
    for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
      if (quiver.arrow(a).source != end) continue;
      Path longer = path;
      longer.push_back(a);
      frontier.emplace_back(std::move(longer), quiver.arrow(a).target);
    }
  }

  DimVector dims;
  for (const auto& paths : at) dims.entries.push_back(paths.size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const auto& arrow = quiver.arrow(a);
    Matrix m(field, dims[arrow.target], dims[arrow.source]);
    for (std::size_t col = 0; col < at[arrow.source].size(); ++col) {
      Path longer = at[arrow.source][col];
      longer.push_back(a);
      m.set(position.at(longer), col, Scalar::one(field));
    }
    maps.push_back(std::move(m));
  }
  return Representation(quiver, field, std::move(dims), std::move(maps));
}

std::string Representation::to_string() const {
  std::ostringstream os;
  os << field_.to_string() << ' ' << dims_.to_string();
  for (const auto& m : maps_) os << ' ' << m.to_string();
  return os.str();
}

void require_compatible(const Representation& a, const Representation& b, const char* context) {
  require_same_field(a.field(), b.field(), context);
  if (!(a.quiver() == b.quiver())) throw PreconditionError(std::string(context) + ": representations of different quivers");
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b, "direct_sum");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(block_diagonal(a.map(k), b.map(k)));
  return Representation(a.quiver(), a.field(), a.dims() + b.dims(), std::move(maps));
}

Representation pencil_point(const Representation& base, const Representation& direction, const Scalar& t) {
  require_compatible(base, direction, "pencil_point");
  if (base.dims() != direction.dims()) throw DimensionMismatch("pencil members have different dimension vectors");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < base.maps().size(); ++k) maps.push_back(base.map(k) + direction.map(k).scaled(t));
  return Representation(base.quiver(), base.field(), base.dims(), std::move(maps));
}

Representation conjugate(const Representation& m, const std::vector<Matrix>& change) {
  if (change.size() != m.quiver().vertex_count()) throw DimensionMismatch("conjugate: one matrix per vertex");
  std::vector<Matrix> inverses;
  for (std::size_t v = 0; v < change.size(); ++v) {
    auto inv = inverse(change[v]);
    if (!inv || change[v].rows() != m.dim(v)) throw PreconditionError("conjugate: base change must be invertible");
    inverses.push_back(std::move(*inv));
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.quiver().arrow(k);
    maps.push_back(change[a.target] * m.map(k) * inverses[a.source]);
  }
  return Representation(m.quiver(), m.field(), m.dims(), std::move(maps));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection keeps the draw unbiased and identical across standard libraries.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Scalar random_scalar(const FieldSpec& field, Rng& rng, long int_range) {
  if (field.is_finite()) return Scalar(field, static_cast<long>(uniform_below(rng, field.characteristic())));
  const auto width = static_cast<std::uint64_t>(2 * int_range + 1);
  return Scalar(field, static_cast<long>(uniform_below(rng, width)) - int_range);
}

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng, long int_range) {
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_scalar(field, rng, int_range));
  return Matrix(field, rows, cols, std::move(entries));
}

Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Representation random_representation(const Quiver& quiver, const FieldSpec& field, const DimVector& dims,
                                     Rng& rng, long int_range) {
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows()) {
    maps.push_back(random_matrix(field, dims.entries.at(a.target), dims.entries.at(a.source), rng, int_range));
  }
  return Representation(quiver, field, dims, std::move(maps));
}

}  // namespace qgrass
