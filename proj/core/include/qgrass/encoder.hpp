#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/polynomial.hpp"
#include "qgrass/subcat.hpp"
#include "qgrass/subrep.hpp"

namespace qgrass {

// A point of P^n with its first nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  // Throws PreconditionError on the zero vector.
  explicit ProjPoint(const Vector& coords);

  const Vector& coords() const noexcept { return coords_; }
  std::string to_string() const;  // "[1:0:2]"

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  Vector coords_;
};

// Every point of P^n(F_p), in lexicographic order of normalized coordinates.
std::vector<ProjPoint> projective_points(std::size_t n, const FieldSpec& field,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// The quiver Q has vertices 0, 1, 2 (printed as 1, 2, 3 in the usual
// convention) with k arrows 1 -> 0 carrying the equations and n+1 arrows
// 1 -> 2 (g_0..g_n) shifting monomials down by one degree. V puts the
// equations on the 1 -> 0 arrows, W the inequations; both have dimension
// vector (1, N, N') with N = |M_{n,d}|, N' = |M_{n,d-1}|.
struct EncodedInstance {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned degree = 0;
  MonomialBasis basis{0, 0};        // M_{n,d}
  MonomialBasis lower_basis{0, 0};  // M_{n,d-1}
  Quiver quiver;
  std::vector<std::size_t> f_arrows;  // arrow index of f_1..f_k
  std::vector<std::size_t> g_arrows;  // arrow index of g_0..g_n
  Representation v;
  Representation w;
  // Input as given, then after degree normalization and repetition.
  std::vector<Polynomial> input_equations;
  std::vector<Polynomial> input_inequations;
  NormalizedSystem normalized;

  static constexpr std::size_t kVertexOne = 0;
  static constexpr std::size_t kVertexTwo = 1;
  static constexpr std::size_t kVertexThree = 2;

  // (0, 1, 1): the dimension vector of the subrepresentations U_x.
  DimVector point_dims() const { return DimVector({0, 1, 1}); }
  SubcatPredicate perp_w() const { return SubcatPredicate::left_perp({w}, {0}); }
};

struct EncodeOptions {
  bool projective_mode = false;  // forwarded to normalize_degrees
};

EncodedInstance encode(const std::vector<Polynomial>& equations, const std::vector<Polynomial>& inequations,
                       const EncodeOptions& options = {});

// U_x: dimension (0, 1, 1), g_j acting as the scalar x_j.
Representation build_ux(const EncodedInstance& inst, const ProjPoint& x);

// The subrepresentation spanned by nu_d(x) at vertex 2 and nu_{d-1}(x) at
// vertex 3. Throws PreconditionError when x is not on the variety.
SubrepPoint point_to_subrep(const EncodedInstance& inst, const ProjPoint& x);

// Decodes a stable (0, 1, 1) subrep; nullopt when its vertex-2 line is not a
// Veronese point.
std::optional<ProjPoint> subrep_to_point(const EncodedInstance& inst, const SubrepPoint& u);

// Points of P^n(F_p) where every input equation vanishes.
std::vector<ProjPoint> variety_points(const EncodedInstance& inst, std::uint64_t cap = kDefaultEnumerationCap);

bool on_variety(const EncodedInstance& inst, const ProjPoint& x);
bool in_open_part(const EncodedInstance& inst, const ProjPoint& x);

struct BijectionReport {
  std::size_t grass_count = 0;
  std::size_t variety_count = 0;
  bool matched = false;
  std::vector<SubrepPoint> undecodable;   // stable subreps that are not Veronese lines
  std::vector<ProjPoint> off_variety;     // decoded points violating some equation
  std::vector<ProjPoint> duplicates;      // decoded twice
  std::vector<ProjPoint> missing;         // variety points with no subrep
};

BijectionReport verify_bijection(const EncodedInstance& inst, std::uint64_t cap = kDefaultEnumerationCap);

struct LemmaHomReport {
  std::size_t hom_v_w = 0;
  std::size_t hom_w_v = 0;
  std::size_t end_v = 0;
  std::size_t end_w = 0;
  bool part_i = false;
  // Truth table over variety points, index 0 meaning "holds":
  // [hom(U_x, W) == 0][some h_j(x) != 0].
  std::size_t table[2][2] = {{0, 0}, {0, 0}};
  std::vector<ProjPoint> violations;
  bool part_ii = false;
  bool ran_part_ii = false;
};

// Part (ii) runs only over finite fields.
LemmaHomReport verify_lemma_hom(const EncodedInstance& inst, std::uint64_t cap = kDefaultEnumerationCap);

struct QuasiProjectiveReport {
  std::size_t grass_count = 0;  // |Gr_E((0,1,1), V)|, E = left perp of W
  std::size_t open_count = 0;   // |{x on X : some h_j(x) != 0}|
  bool matched = false;
  bool ambient_in_e = false;
  std::size_t subreps_checked = 0;
  std::vector<SubrepPoint> quotient_outside_e;
  std::vector<ProjPoint> mismatches;  // symmetric difference of the two sets
};

QuasiProjectiveReport verify_quasi_projective(const EncodedInstance& inst,
                                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qgrass
