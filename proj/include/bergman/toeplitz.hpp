#pragma once

#include <vector>

#include "bergman/geometry.hpp"
#include "bergman/moments.hpp"

namespace bergman::toeplitz {

struct SweepPoint {
    int order;
    double top;
    double bottom;
};

/// Sorted eigenvalues of a Galerkin compression. Compression eigenvalues
/// approach Spec(T_U) from inside; nothing here is an upper bound on the
/// true spectrum.
struct SpectrumEstimate {
    std::vector<double> eigenvalues;  // descending
    int order = 0;
    double gram_error = 0.0;
    double solver_residual = 0.0;
    std::vector<SweepPoint> history;

    double top() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double bottom() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

/// Full eigenvalue set of the Hermitian compression, via cyclic Jacobi with
/// off-diagonal Frobenius threshold 1e-13 and at most 60 sweeps. Throws
/// NonConvergence (carrying the residual) past the sweep limit.
SpectrumEstimate eigensolve(const moments::GramMatrix& g);

struct NormEstimate {
    double lower = 0.0;  // certified lower bound for ||T_U|| up to tolerances
    std::vector<SweepPoint> history;

    double restriction_norm_lower() const;
};

/// Max top compression eigenvalue across a strictly increasing order sweep.
/// A lower bound for ||T_U||; no upper bound is claimed from compressions.
NormEstimate norm_estimate(const geometry::AmbientDomain& ambient,
                           const geometry::SubregionSpec& region, const std::vector<int>& sweep,
                           const moments::QuadratureParams& quad = {});

struct SpectralGapReport {
    double min_eig_complement = 0.0;
    double closed_range_indicator = 0.0;  // 1 - top eigenvalue of gram(region)
    int order = 0;
    double combined_tolerance = 0.0;
};

/// Both sides of the complement duality at one order. A positive indicator
/// is evidence, not proof, of closed range: compressions only bound the
/// bottom of the true spectrum from above.
SpectralGapReport spectral_gap_report(const geometry::AmbientDomain& ambient,
                                      const geometry::SubregionSpec& region, int order,
                                      const moments::QuadratureParams& quad = {});

struct IsospectralityReport {
    double max_relative_deviation = 0.0;
    SpectrumEstimate original;
    SpectrumEstimate image;
};

/// Compares the compression spectra of a region and of its image under a
/// disc automorphism at the same order; returns the max relative deviation
/// of the top 3 eigenvalues. Disc images map exactly through the circle
/// image formula; other regions fall back to indicator quadrature.
IsospectralityReport isospectrality_check(const geometry::SubregionSpec& region,
                                          const geometry::MoebiusMap& map, int order,
                                          const moments::QuadratureParams& quad = {});

}  // namespace bergman::toeplitz
