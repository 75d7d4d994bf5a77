#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qgrass/matrix.hpp"
#include "qgrass/quiver.hpp"

namespace qgrass {

// A point of R_d(Q): one matrix of shape d_target x d_source per arrow.
class Representation {
 public:
  Representation() = default;
  // Validates every arrow matrix shape and field.
  Representation(Quiver quiver, FieldSpec field, DimVector dims, std::vector<Matrix> maps);

  // All arrow maps zero.
  static Representation zero_maps(const Quiver& quiver, const FieldSpec& field, const DimVector& dims);
  static Representation zero(const Quiver& quiver, const FieldSpec& field);
  static Representation simple(const Quiver& quiver, const FieldSpec& field, std::size_t vertex);
  // Indecomposable projective at `vertex`: the span of paths starting there.
  // Requires an acyclic quiver.
  static Representation projective(const Quiver& quiver, const FieldSpec& field, std::size_t vertex);

  const Quiver& quiver() const noexcept { return quiver_; }
  const FieldSpec& field() const noexcept { return field_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  bool is_zero() const { return dims_.is_zero(); }

  // Stable textual form; equal strings iff equal representations.
  std::string to_string() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  FieldSpec field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

// Throws unless both live on the same quiver and field.
void require_compatible(const Representation& a, const Representation& b, const char* context);

// Block-diagonal sum; dims add.
Representation direct_sum(const Representation& a, const Representation& b);

// M_a + t * D_a for every arrow.
Representation pencil_point(const Representation& base, const Representation& direction, const Scalar& t);

// Base change: arrow a: i -> j becomes g_j M_a g_i^{-1}.
Representation conjugate(const Representation& m, const std::vector<Matrix>& change);

// Seeded generators. Over Q entries are uniform integers in
// [-int_range, int_range]; over F_p uniform residues.
using Rng = std::mt19937_64;
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
Scalar random_scalar(const FieldSpec& field, Rng& rng, long int_range = 3);
Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng, long int_range = 3);
Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng);
Representation random_representation(const Quiver& quiver, const FieldSpec& field, const DimVector& dims,
                                     Rng& rng, long int_range = 3);

}  // namespace qgrass
