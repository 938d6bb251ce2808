#pragma once

#include <functional>
#include <string>
#include <variant>

#include "bergman/types.hpp"

namespace bergman::oracles {

/// Closed-form eigenvalue sequence indexed by total degree.
struct EigenvalueSequence {
    std::function<double(int)> generator;
    double restriction_norm = 0.0;  // sup over the sequence of sqrt(lambda)
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct NormBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct OracleResult {
    std::variant<EigenvalueSequence, Interval, NormBounds> kind;
    std::string provenance;

    const EigenvalueSequence& sequence() const { return std::get<EigenvalueSequence>(kind); }
    const Interval& interval() const { return std::get<Interval>(kind); }
    const NormBounds& bounds() const { return std::get<NormBounds>(kind); }
};

/// Spectrum of the dilation U = rho * Omega of a complete Reinhardt domain
/// in C^n: degree d carries rho^{2(d+n)}; the restriction norm is rho^n.
OracleResult dilation_spectrum(int n, double rho);

/// Spectrum of T_U for a compactly contained disc U = D(z0, r) in the unit
/// disc: lambda_k = ((A-1)/(A+1))^{2k+2} with
/// A = sqrt((1+|z0|+r)(1-|z0|+r) / ((1-|z0|-r)(1+|z0|-r))).
OracleResult offcenter_disc_spectrum(Cplx z0, double r);

/// Half-plane multiplier of the indicator of the strip a_lo < Im z < a_hi:
/// gamma(x) = e^{-2 x a_lo} - e^{-2 x a_hi} (second term 0 for infinite
/// a_hi), evaluated cancellation-safe.
double gamma_strip(double a_lo, double a_hi, double x);

/// Spectrum [0, alpha^{-1/(alpha-1)} - alpha^{-alpha/(alpha-1)}] of the
/// horocyclic strip with horocycle radii 0 < rho1 < rho2 < 1, where
/// alpha = (1/rho1 - 1)/(1/rho2 - 1). The analytic endpoint is
/// cross-validated against a golden-section maximization of gamma_strip to
/// 1e-10 before being returned.
OracleResult horostrip_interval(double rho1, double rho2);

double horostrip_alpha(double rho1, double rho2);

/// Numeric route to the horostrip endpoint: grid bracket plus golden
/// section over gamma_strip, independent of the closed form.
double horostrip_numeric_sup(double rho1, double rho2);

/// Half-plane multiplier of the indicator of the wedge a < theta/pi < b:
/// (xi^b - xi^a)/(xi - 1) at xi = e^{-2 pi lambda}, with the removable
/// singularity at xi = 1 giving b - a. Log-space evaluation keeps the value
/// finite across the whole grid.
double gamma_wedge(double a, double b, double lambda);

/// Same multiplier parameterized by t = ln(xi).
double gamma_wedge_logxi(double a, double b, double t);

/// Spectrum [0, c] of the hypercyclic lune with normalized wedge angles
/// 0 <= a < b <= 1: c is the numeric supremum of gamma_wedge over a log-xi
/// grid on [-40, 40] (step 0.01) refined by golden section to 1e-12.
/// Crescents (a = 0 or b = 1) return [0, 1] after checking that the numeric
/// sup approaches 1.
OracleResult lune_norm(double a, double b);

/// Grid supremum of the wedge multiplier; crescents extend the grid range
/// until the sup saturates. Used by lune_norm and exposed for containment
/// tests.
double lune_grid_sup(double a, double b);

/// Norm bounds (r/R)^n <= ||R_U|| <= (delta/R)^{(n-1)/2} for a ball U of
/// radius r inside a ball Omega of radius R, delta the distance from the
/// center of U to the boundary of Omega; the upper bound is 1 for n = 1.
OracleResult ball_bounds(int n, double R, double r, double delta);

/// Norm of the slice restriction between concentric (n-1)-balls over the
/// point z of the projected disc |z - delta| < r (tangent-normalized
/// coordinates, R = 1): ((r^2-|z-delta|^2)/(1-|z-1|^2))^{(n-1)/2}.
double slice_norm(int n, double r, double delta, Cplx z);

/// Golden-section maximization of f on [lo, hi] to the given x tolerance.
/// Returns the argmax; unimodality is the caller's concern.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double x_tol);

}  // namespace bergman::oracles
