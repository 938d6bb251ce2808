#include "bergman/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bergman/error.hpp"

namespace bergman::toeplitz {

using geometry::AmbientDomain;
using geometry::SubregionSpec;
using moments::GramMatrix;
using moments::MomentRequest;

namespace {

constexpr double kOffDiagThreshold = 1e-13;
constexpr int kMaxSweeps = 60;

double offdiag_frobenius(const std::vector<Cplx>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (j != k) s += std::norm(a[j * n + k]);
    return std::sqrt(s);
}

// One cyclic Jacobi rotation annihilating the (p, q) entry. The unitary
// acts on the (p, q) plane as [[c, s u], [-s conj(u), c]] with u the phase
// of a_pq.
void rotate(std::vector<Cplx>& a, std::size_t n, std::size_t p, std::size_t q) {
    Cplx apq = a[p * n + q];
    double m = std::abs(apq);
    if (m == 0.0) return;
    Cplx u = apq / m;
    double app = a[p * n + p].real();
    double aqq = a[q * n + q].real();
    double tau = (aqq - app) / (2.0 * m);
    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    // Column update: col_p <- c col_p - s conj(u) col_q; col_q <- s u col_p + c col_q.
    for (std::size_t i = 0; i < n; ++i) {
        Cplx aip = a[i * n + p];
        Cplx aiq = a[i * n + q];
        a[i * n + p] = c * aip - s * std::conj(u) * aiq;
        a[i * n + q] = s * u * aip + c * aiq;
    }
    // Row update: row_p <- c row_p - s u row_q; row_q <- s conj(u) row_p + c row_q.
    for (std::size_t i = 0; i < n; ++i) {
        Cplx api = a[p * n + i];
        Cplx aqi = a[q * n + i];
        a[p * n + i] = c * api - s * u * aqi;
        a[q * n + i] = s * std::conj(u) * api + c * aqi;
    }
    // Restore exact Hermitian structure on the touched entries.
    a[p * n + q] = Cplx(0, 0);
    a[q * n + p] = Cplx(0, 0);
    a[p * n + p] = Cplx(a[p * n + p].real(), 0);
    a[q * n + q] = Cplx(a[q * n + q].real(), 0);
}

GramMatrix gram_for(const AmbientDomain& ambient, const SubregionSpec& region, int order,
                    const moments::QuadratureParams& quad) {
    MomentRequest request{ambient, region, order, moments::Method::Auto, quad};
    return moments::gram(request);
}

}  // namespace

SpectrumEstimate eigensolve(const GramMatrix& g) {
    std::size_t n = g.size();
    std::vector<Cplx> a = g.entries;
    double residual = offdiag_frobenius(a, n);
    int sweep = 0;
    while (residual > kOffDiagThreshold) {
        if (sweep >= kMaxSweeps)
            throw Error(ErrorCode::NonConvergence,
                        "Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                            " sweeps",
                        std::to_string(residual));
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a[p * n + q]) > 0.0) rotate(a, n, p, q);
        residual = offdiag_frobenius(a, n);
        ++sweep;
    }
    SpectrumEstimate est;
    est.order = g.order;
    est.gram_error = g.error_estimate;
    est.solver_residual = residual;
    est.eigenvalues.resize(n);
    for (std::size_t j = 0; j < n; ++j) est.eigenvalues[j] = a[j * n + j].real();
    std::sort(est.eigenvalues.begin(), est.eigenvalues.end(), std::greater<double>());
    return est;
}

double NormEstimate::restriction_norm_lower() const { return std::sqrt(std::max(lower, 0.0)); }

NormEstimate norm_estimate(const AmbientDomain& ambient, const SubregionSpec& region,
                           const std::vector<int>& sweep, const moments::QuadratureParams& quad) {
    if (sweep.empty()) throw Error(ErrorCode::InvalidArgument, "order sweep must be non-empty");
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i] <= sweep[i - 1])
            throw Error(ErrorCode::InvalidArgument, "order sweep must be strictly increasing");
    NormEstimate est;
    for (int order : sweep) {
        SpectrumEstimate spectrum = eigensolve(gram_for(ambient, region, order, quad));
        est.history.push_back({order, spectrum.top(), spectrum.bottom()});
        est.lower = std::max(est.lower, spectrum.top());
    }
    return est;
}

SpectralGapReport spectral_gap_report(const AmbientDomain& ambient, const SubregionSpec& region,
                                      int order, const moments::QuadratureParams& quad) {
    GramMatrix g = gram_for(ambient, region, order, quad);
    GramMatrix gc = gram_for(ambient, SubregionSpec::complement(region), order, quad);
    SpectrumEstimate spec = eigensolve(g);
    SpectrumEstimate spec_c = eigensolve(gc);
    SpectralGapReport report;
    report.order = order;
    report.closed_range_indicator = 1.0 - spec.top();
    report.min_eig_complement = spec_c.bottom();
    report.combined_tolerance = spec.gram_error + spec_c.gram_error + spec.solver_residual +
                                spec_c.solver_residual + 1e-12;
    return report;
}

IsospectralityReport isospectrality_check(const SubregionSpec& region,
                                          const geometry::MoebiusMap& map, int order,
                                          const moments::QuadratureParams& quad) {
    AmbientDomain disc = AmbientDomain::unit_disc();

    auto mapped_disc_region = [&](const geometry::DiscSpec& d) {
        geometry::DiscSpec image = geometry::map_disc(map, d);
        return SubregionSpec::disc(image.center, image.radius);
    };

    GramMatrix g = gram_for(disc, region, order, quad);
    GramMatrix g_image = [&]() {
        if (const auto* d = region.get_if<geometry::DiscSpec>())
            return gram_for(disc, mapped_disc_region(*d), order, quad);
        if (const auto* h = region.get_if<geometry::HorodiscSpec>())
            return gram_for(disc, mapped_disc_region(geometry::horodisc_as_disc(*h)), order, quad);
        if (const auto* dc = region.get_if<geometry::DilatedCopySpec>())
            return gram_for(disc, mapped_disc_region(geometry::DiscSpec{Cplx(0, 0), dc->rho}),
                            order, quad);
        if (const auto* s = region.get_if<geometry::HorocyclicStripSpec>()) {
            geometry::DiscSpec outer = geometry::map_disc(
                map, geometry::horodisc_as_disc({s->tangency_angle, s->rho2}));
            geometry::DiscSpec inner = geometry::map_disc(
                map, geometry::horodisc_as_disc({s->tangency_angle, s->rho1}));
            GramMatrix go = gram_for(disc, SubregionSpec::disc(outer.center, outer.radius), order,
                                     quad);
            GramMatrix gi = gram_for(disc, SubregionSpec::disc(inner.center, inner.radius), order,
                                     quad);
            for (std::size_t i = 0; i < go.entries.size(); ++i) go.entries[i] -= gi.entries[i];
            return go;
        }
        // General image: membership through the inverse map, quadrature Gram.
        SubregionSpec image = SubregionSpec::indicator(
            "moebius-image", [&map, region = region](const Point& z) {
                Point w{map.apply_inverse(z[0])};
                return geometry::contains(region, AmbientDomain::unit_disc(), w);
            });
        return gram_for(disc, image, order, quad);
    }();

    IsospectralityReport report;
    report.original = eigensolve(g);
    report.image = eigensolve(g_image);
    std::size_t count = std::min<std::size_t>(3, report.original.eigenvalues.size());
    for (std::size_t i = 0; i < count; ++i) {
        double a = report.original.eigenvalues[i];
        double b = report.image.eigenvalues[i];
        double denom = std::max({std::abs(a), std::abs(b), 1e-300});
        report.max_relative_deviation =
            std::max(report.max_relative_deviation, std::abs(a - b) / denom);
    }
    return report;
}

}  // namespace bergman::toeplitz
