#pragma once

#include <cstdint>
#include <optional>

#include "qgrass/hom.hpp"

namespace qgrass {

enum class IsoVerdict {
  Isomorphic,
  NotIsomorphic,
  // No isomorphism was found by random search and the exhaustive phase was
  // too large to run.
  ProbablyNotIsomorphic,
};

const char* to_string(IsoVerdict v);

struct IsoOptions {
  std::size_t random_trials = 64;
  std::uint64_t seed = 0;
  // Run the exhaustive phase when the Hom span has at most this many elements.
  std::uint64_t exhaustive_limit = 10'000;
  long int_range = 1 << 20;  // coefficient range for random trials over Q
};

struct IsoResult {
  IsoVerdict verdict;
  std::optional<Morphism> witness;
};

IsoResult are_isomorphic(const Representation& m, const Representation& n, const IsoOptions& options = {});

}  // namespace qgrass
