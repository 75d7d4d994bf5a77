#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgrass/matrix.hpp"

namespace qgrass {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form. The result is unique for a given input, which is
// what makes it usable as a canonical form for row spaces.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0}, one vector per free column of rref(m): the vector
// has a 1 at its free column, zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

// One solution of m x = b with every free variable set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Canonical basis of the row space: the nonzero rows of rref(m).
Matrix row_space_basis(const Matrix& m);

// Square matrix of full rank. Empty (0x0) matrices count as invertible.
bool is_invertible(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace qgrass
