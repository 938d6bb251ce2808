#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bergman/geometry.hpp"
#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

namespace bergman::moments {

enum class Method { Auto, ClosedForm, Quadrature };

struct QuadratureParams {
    std::size_t budget = 200000;
    int depth = 12;
};

struct MomentRequest {
    geometry::AmbientDomain ambient;
    geometry::SubregionSpec region;
    int order = 1;
    Method method = Method::Auto;
    QuadratureParams quad{};
};

/// Hermitian N x N compression of T_U in the monomial basis:
/// G[j][k] = <phi_j, phi_k>_U. error_estimate is zero on the closed-form
/// path and a Frobenius-style bound on the quadrature path.
struct GramMatrix {
    geometry::AmbientDomain ambient;
    int order = 1;
    std::vector<MultiIndex> index_list;
    std::vector<Cplx> entries;  // row-major
    double error_estimate = 0.0;
    bool truncated_quality = false;

    std::size_t size() const { return index_list.size(); }
    Cplx& at(std::size_t j, std::size_t k) { return entries[j * size() + k]; }
    const Cplx& at(std::size_t j, std::size_t k) const { return entries[j * size() + k]; }

    static GramMatrix identity_like(const GramMatrix& g);
};

/// Raw subdomain monomial moment over a disc compactly contained in the
/// unit disc (tangency allowed): int_{D(c,r)} z^j conj(z)^k dV, i.e.
/// sum_m C(j,m) C(k,m) c^{j-m} conj(c)^{k-m} pi r^{2m+2}/(m+1). Callers
/// normalize by the monomial norms.
Cplx disc_moment(const geometry::AmbientDomain& ambient, Cplx center, double radius, int j,
                 int k);

GramMatrix gram(const MomentRequest& request);

struct QuadResult {
    Cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    bool truncated = false;
};

/// Adaptive indicator quadrature of a pointwise integrand over a region of
/// the disc (planar ambient only).
QuadResult quadrature_integral(const geometry::SubregionSpec& region,
                               const geometry::AmbientDomain& ambient,
                               const std::function<Cplx(Cplx)>& integrand, std::size_t budget,
                               int depth);

/// Axis-aligned bounding box of the region inside the ambient domain
/// (planar only); tight for disc-shaped regions, the ambient square
/// otherwise.
quadrature::Box bounding_box(const geometry::SubregionSpec& region,
                             const geometry::AmbientDomain& ambient);

/// True when gram() has an exact formula for the region (Disc, Horodisc,
/// HorocyclicStrip, DilatedCopy, ProductRegion, Complements of those).
bool has_closed_form(const geometry::SubregionSpec& region);

}  // namespace bergman::moments
