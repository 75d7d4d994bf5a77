#pragma once

#include <cstdint>
#include <vector>

#include "qgrass/isomorphism.hpp"
#include "qgrass/subrep.hpp"

namespace qgrass {

enum class FiltVerdict { Yes, No, CapExceeded };

const char* to_string(FiltVerdict v);

// One step of a filtration certificate: inside the current quotient Y (X at
// the first step), `sub` is a subrepresentation isomorphic to layers[layer];
// the next step works in Y / sub.
struct FiltStep {
  std::size_t layer;
  SubrepPoint sub;
};

struct FiltResult {
  FiltVerdict verdict = FiltVerdict::No;
  std::vector<FiltStep> certificate;  // bottom-up: X_1, X_2/X_1, ...
  std::uint64_t candidates = 0;       // subreps examined
  // Some isomorphism test could only answer "probably not"; a No verdict is
  // then not a proof.
  bool inconclusive_iso = false;
};

// Searches for 0 = X_0 < X_1 < ... < X_r = X with every X_i / X_{i-1}
// isomorphic to some layer. Layers may repeat. Zero layers are ignored.
// Requires a finite field.
FiltResult is_filtered_by(const Representation& x, const std::vector<Representation>& layers,
                          std::uint64_t cap = kDefaultEnumerationCap, const IsoOptions& iso = {});

// Replays a certificate: each step's sub must be stable and isomorphic to its
// layer, and the final quotient must be zero.
bool check_filtration_certificate(const Representation& x, const std::vector<Representation>& layers,
                                  const std::vector<FiltStep>& certificate, const IsoOptions& iso = {});

}  // namespace qgrass
