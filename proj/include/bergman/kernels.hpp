#pragma once

#include <vector>

#include "bergman/geometry.hpp"
#include "bergman/types.hpp"

namespace bergman::kernels {

/// Orthonormal monomial basis phi_alpha = z^alpha / ||z^alpha|| truncated at
/// total degree order-1. The index list is the single canonical basis order
/// used everywhere: ascending total degree, and within a degree descending
/// lexicographic on the first coordinate (so 1, z1, z2, z1^2, z1 z2, z2^2
/// for n = 2). For n = 1 this is plain degree order k = 0 .. order-1.
struct MonomialBasis {
    geometry::AmbientDomain ambient;
    int order;
    std::vector<MultiIndex> index_list;
    std::vector<double> norms;  // ||z^alpha||_Omega, same order as index_list

    std::size_t size() const { return index_list.size(); }

    /// All phi_alpha(z) in basis order.
    std::vector<Cplx> evaluate(const Point& z) const;
};

MonomialBasis make_basis(const geometry::AmbientDomain& ambient, int order);

/// Exact ||z^alpha||^2_Omega. Unit disc: pi/(k+1). Unit ball in C^n:
/// pi^n alpha! / (n+|alpha|)!. Polydisc: prod_i pi r_i^{2 a_i+2}/(a_i+1).
double monomial_norm_sq(const geometry::AmbientDomain& ambient, const MultiIndex& alpha);

/// Bergman kernel on the diagonal, B_Omega(z, z). Throws DomainError when z
/// is not strictly inside.
double bergman_kernel_diag(const geometry::AmbientDomain& ambient, const Point& z);

}  // namespace bergman::kernels
