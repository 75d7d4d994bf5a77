#pragma once

#include <vector>

#include "qgrass/hom.hpp"

namespace qgrass {

// A short exact sequence  sub >-> middle ->> quotient.
struct Extension {
  Representation middle;
  Morphism inclusion;   // sub -> middle
  Morphism projection;  // middle -> quotient
};

// Middle term with arrow matrices [[N_a, Z_a], [0, M_a]] for a cocycle Z
// (Z_a of shape dim N_t(a) x dim M_s(a)). Exactness is verified before
// returning; a failure throws InternalInconsistency.
Extension build_extension(const Representation& sub, const Representation& quotient,
                          const std::vector<Matrix>& cocycle);

// Z_a = h_t(a) M_a - N_a h_s(a) for h_i : M_i -> N_i. Extensions built from
// such cocycles split.
std::vector<Matrix> coboundary(const Representation& sub, const Representation& quotient,
                               const std::vector<Matrix>& h);

std::vector<Matrix> random_cocycle(const Representation& sub, const Representation& quotient, Rng& rng,
                                   long int_range = 3);

}  // namespace qgrass
