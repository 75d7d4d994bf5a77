#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgrass/matrix.hpp"

namespace qgrass {

// Default bound on enumeration candidates.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Number of e-dimensional subspaces of F_q^d, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t d, std::size_t e, std::uint64_t q);

// Every e-dimensional subspace of F_p^d exactly once, as its e x d rref
// basis. Order: pivot column sets lexicographically, then free entries in
// odometer order. Throws CapExceeded when the count exceeds `cap` and
// PreconditionError over the rationals.
std::vector<Matrix> enumerate_subspaces(std::size_t d, std::size_t e, const FieldSpec& field,
                                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qgrass
