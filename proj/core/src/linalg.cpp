#include "qgrass/linalg.hpp"

#include "qgrass/errors.hpp"

namespace qgrass {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) {
        Scalar tmp = a(r, k);
        a.set(r, k, a(piv, k));
        a.set(piv, k, std::move(tmp));
      }
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!a(r, k).is_zero()) a.set(r, k, a(r, k) * inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(r, k).is_zero()) a.set(i, k, a(i, k) - factor * a(r, k));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto [red, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("solve: right-hand side has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(m.rows()));
  }
  for (const auto& s : b) require_same_field(m.field(), s.field(), "solve");
  const Matrix aug = hstack(m, Matrix::column(b, m.field()));
  const auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

Matrix row_space_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  return red.block(0, 0, pivots.size(), m.cols());
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto [red, pivots] = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return red.block(0, n, n, n);
}

}  // namespace qgrass
