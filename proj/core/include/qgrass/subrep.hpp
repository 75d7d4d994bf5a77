#pragma once

#include <cstdint>
#include <vector>

#include "qgrass/representation.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

// A subrepresentation given by one rref basis (rows) per vertex.
struct SubrepPoint {
  std::vector<Matrix> bases;

  DimVector dims() const;
  std::string to_string() const;

  friend bool operator==(const SubrepPoint&, const SubrepPoint&) = default;
};

// Canonicalizes arbitrary spanning rows per vertex into a SubrepPoint.
SubrepPoint make_subrep_point(const std::vector<Matrix>& spanning_rows);

// M_a(U_s(a)) within U_t(a) for every arrow, tested by
// rank([U_t; U_s M_a^T]) == dim U_t.
bool is_stable(const Representation& m, const SubrepPoint& u);

// All points of the quiver Grassmannian Gr(e, M) over a finite field, in
// canonical order (vertex 0 varies slowest). Throws CapExceeded when the
// product of per-vertex Grassmannian sizes exceeds `cap`.
std::vector<SubrepPoint> enumerate_subreps(const Representation& m, const DimVector& e,
                                           std::uint64_t cap = kDefaultEnumerationCap);

struct SubQuotient {
  Representation sub;
  Representation quotient;
};

// M|_U in U's rref basis and M/U in the basis of standard vectors at the
// non-pivot coordinates. Throws PreconditionError if U is not stable.
SubQuotient restrict_and_quotient(const Representation& m, const SubrepPoint& u);

}  // namespace qgrass
