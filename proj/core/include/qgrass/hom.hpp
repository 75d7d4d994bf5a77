#pragma once

#include <cstddef>
#include <vector>

#include "qgrass/representation.hpp"

namespace qgrass {

// One linear map per vertex, phi_i : M_i -> N_i (shape dim N_i x dim M_i).
using Morphism = std::vector<Matrix>;

struct HomBasis {
  std::vector<Morphism> morphisms;

  std::size_t dimension() const noexcept { return morphisms.size(); }
};

// The linear map  (+)_i Hom(M_i, N_i) -> (+)_a Hom(M_s(a), N_t(a)),
// (phi_i) |-> (phi_t(a) M_a - N_a phi_s(a))_a. Unknowns are the entries of
// phi_0, phi_1, ... in row-major order; equation blocks follow arrow order.
// Its kernel is Hom(M, N); on an acyclic quiver its cokernel is Ext^1(M, N).
Matrix hom_system(const Representation& m, const Representation& n);

// Number of unknowns of hom_system: sum_i dim M_i * dim N_i.
std::size_t hom_unknowns(const Representation& m, const Representation& n);

HomBasis hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

// Cokernel dimension of hom_system, cross-checked against
// hom_dim - euler_form. Requires an acyclic quiver.
std::size_t ext1_dim(const Representation& m, const Representation& n);

// Projective dimension over the hereditary path algebra: 0 or 1.
// Throws PreconditionError on a zero representation or a cyclic quiver.
int pdim(const Representation& m);

// True iff phi_t(a) M_a = N_a phi_s(a) for every arrow.
bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi);

// Combination sum_k c_k * basis_k.
Morphism combine(const HomBasis& basis, const std::vector<Scalar>& coefficients);

Morphism compose(const Morphism& second, const Morphism& first);
Morphism identity_morphism(const Representation& m);

bool is_iso_morphism(const Morphism& phi);

}  // namespace qgrass
