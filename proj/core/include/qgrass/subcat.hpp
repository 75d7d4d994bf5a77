#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/extension.hpp"
#include "qgrass/subrep.hpp"

namespace qgrass {

// A full subcategory of Q-representations cut out by Hom/Ext vanishing.
// The defining modules are stored by value so a predicate fully describes
// the subcategory it tests.
class SubcatPredicate {
 public:
  enum class Kind { All, LeftPerp, RightPerp, PdimAtMost, Intersection };

  static SubcatPredicate all();
  // {X : [X, M]^i = 0 for all M in modules, i in indices}; indices within {0, 1}.
  static SubcatPredicate left_perp(std::vector<Representation> modules, std::vector<int> ext_indices = {0});
  // {X : [M, X]^i = 0 ...}.
  static SubcatPredicate right_perp(std::vector<Representation> modules, std::vector<int> ext_indices = {0});
  static SubcatPredicate pdim_at_most(int bound);
  static SubcatPredicate intersection(std::vector<SubcatPredicate> parts);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Representation>& modules() const noexcept { return modules_; }
  const std::vector<int>& ext_indices() const noexcept { return indices_; }
  int bound() const noexcept { return bound_; }
  const std::vector<SubcatPredicate>& parts() const noexcept { return parts_; }

  // Short human-readable form, e.g. "leftperp[0](1 module)".
  std::string describe() const;

 private:
  Kind kind_ = Kind::All;
  std::vector<Representation> modules_;
  std::vector<int> indices_;
  int bound_ = 0;
  std::vector<SubcatPredicate> parts_;
};

// Membership via hom_dim / ext1_dim. Throws on a quiver or field mismatch
// with the predicate's modules.
bool member(const SubcatPredicate& pred, const Representation& x);

// Gr_E(e, M): subreps U with M|_U and M/U both in E. Requires member(pred, M).
std::vector<SubrepPoint> exact_grassmannian_points(const Representation& m, const DimVector& e,
                                                   const SubcatPredicate& pred,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

struct ExtensionSampleOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t max_dim_per_vertex = 2;
  std::size_t retries = 1000;  // per member draw
  long int_range = 3;
};

struct ExtensionViolation {
  std::size_t trial;
  Representation sub;
  Representation quotient;
  std::vector<Matrix> cocycle;
  Representation middle;
};

struct ExtensionSampleReport {
  std::size_t trials = 0;
  std::size_t rejected_draws = 0;
  std::vector<ExtensionViolation> violations;
};

// Draws a random member of pred with random dimensions; throws
// SamplerStarvation after `retries` rejections.
Representation sample_member(const SubcatPredicate& pred, const Quiver& quiver, const FieldSpec& field,
                             Rng& rng, const ExtensionSampleOptions& options, std::size_t* rejected = nullptr);

// For each trial: members N, M and a random cocycle; records any middle term
// that falls outside pred.
ExtensionSampleReport extension_closed_sample(const SubcatPredicate& pred, const Quiver& quiver,
                                              const FieldSpec& field, const ExtensionSampleOptions& options = {});

// Deterministic per-trial generator derived from a base seed.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace qgrass
