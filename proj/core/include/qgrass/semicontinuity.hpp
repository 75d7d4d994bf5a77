#pragma once

#include <cstddef>
#include <vector>

#include "qgrass/representation.hpp"

namespace qgrass {

// Which argument of Hom the pencil M(t) = M0 + t M1 occupies.
enum class PencilSlot {
  Second,  // hom_dim(X, M(t))
  First,   // hom_dim(M(t), X)
};

struct PencilSample {
  long t;
  std::size_t hom_dim;
};

struct PencilReport {
  std::size_t unknowns = 0;  // r, the number of unknowns of the hom system
  std::size_t at_zero = 0;
  std::vector<PencilSample> samples;
  std::size_t minimum = 0;
  bool holds = false;  // at_zero >= minimum
};

// The default sample set 1, 2, ..., r + 1.
std::vector<long> default_pencil_samples(const Representation& m0, const Representation& x);

// Upper semicontinuity of hom_dim along the pencil. Requires the rationals,
// distinct nonzero samples, and at least r + 1 of them.
PencilReport pencil_hom_semicontinuity(const Representation& m0, const Representation& m1,
                                       const Representation& x, const std::vector<long>& samples,
                                       PencilSlot slot = PencilSlot::Second);

}  // namespace qgrass
