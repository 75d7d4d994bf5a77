#include "qgrass/subspace.hpp"

#include <limits>

#include "qgrass/errors.hpp"

namespace qgrass {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

}  // namespace

std::uint64_t gaussian_binomial(std::size_t d, std::size_t e, std::uint64_t q) {
  if (e > d) return 0;
  // q-Pascal: [d, e] = [d-1, e-1] + q^e [d-1, e].
  std::vector<std::uint64_t> row(e + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    for (std::size_t k = std::min(n, e); k >= 1; --k) {
      std::uint64_t qk = 1;
      for (std::size_t i = 0; i < k; ++i) qk = sat_mul(qk, q);
      row[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
    }
  }
  return row[e];
}

std::vector<Matrix> enumerate_subspaces(std::size_t d, std::size_t e, const FieldSpec& field, std::uint64_t cap) {
  if (!field.is_finite()) throw PreconditionError("subspace enumeration needs a finite field");
  if (e > d) return {};
  const std::uint64_t p = field.characteristic();
  const std::uint64_t count = gaussian_binomial(d, e, p);
  if (count > cap) {
    throw CapExceeded("Gr(" + std::to_string(e) + ", " + std::to_string(d) + ") over " + field.to_string() +
                      " has " + (count == kSaturated ? std::string(">2^64") : std::to_string(count)) +
                      " points, cap is " + std::to_string(cap));
  }

  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<std::size_t> pivots(e);
  for (std::size_t i = 0; i < e; ++i) pivots[i] = i;

  for (;;) {
    // Free positions: row r, column c > pivots[r] with c not a pivot column.
    std::vector<bool> is_pivot(d, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t c = pivots[r] + 1; c < d; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);

    std::vector<std::uint32_t> digits(free.size(), 0);
    for (;;) {
      Matrix m(field, e, d);
      for (std::size_t r = 0; r < e; ++r) m.set(r, pivots[r], Scalar::one(field));
      for (std::size_t k = 0; k < free.size(); ++k) {
        if (digits[k] != 0) m.set(free[k].first, free[k].second, Scalar(field, static_cast<long>(digits[k])));
      }
      out.push_back(std::move(m));
      std::size_t k = free.size();
      while (k > 0) {
        --k;
        if (++digits[k] < p) break;
        digits[k] = 0;
        if (k == 0) {
          k = free.size() + 1;  // wrapped around
          break;
        }
      }
      if (free.empty() || k == free.size() + 1) break;
    }

    // Next pivot set in lexicographic order.
    std::size_t i = e;
    while (i > 0 && pivots[i - 1] == d - e + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < e; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace qgrass
