#pragma once

#include <optional>

#include "bergman/geometry.hpp"
#include "bergman/kernels.hpp"
#include "bergman/moments.hpp"

namespace bergman::schatten {

struct SchattenReport {
    double p = 1.0;
    double value_matrix = 0.0;  // ||T_U||_{S_p} of the compression
    std::optional<double> value_trace_formula;  // p = 1 path via the kernel integral
    int order = 0;
    double tail_bound = 0.0;
    double power_path_deviation = 0.0;  // integer p: |eigen path - matrix power path|
};

/// Schatten p-norm of the compression: (sum lambda^p)^{1/p} over eigenvalues
/// clamped to [0, 1]. Integer p is cross-checked against the matrix-power
/// trace to 1e-10. `tail_bound` is a caller-supplied bound on the discarded
/// eigenvalue tail (0 when unknown) and is carried into the report.
SchattenReport schatten_norm(const moments::GramMatrix& g, double p, double tail_bound = 0.0);

/// ||R_U||_{S_p} = ||T_U||_{S_{2p}}^{1/2}.
double restriction_schatten_norm(const moments::GramMatrix& g, double p);

struct TraceResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t cells = 0;
};

/// Trace of T_U as the integral of the Bergman kernel diagonal over U.
/// Compactly contained regions integrate directly; ideal polygons refine
/// dyadically toward each cusp (24 rings per cusp, final ring bounded);
/// boundary-touching regions are integrated over dyadic shells in |z| and
/// throw NonTraceClass when the shell contributions stop decreasing over 6
/// successive depths.
TraceResult trace_by_formula(const geometry::SubregionSpec& region,
                             const geometry::AmbientDomain& ambient,
                             std::size_t budget = 3000000);

/// Order-N truncation of the iterated kernel diagonal
/// B^{(p)}(z, z) = sum_{j,k} (G^{p-1})[j][k] phi_k(z) conj(phi_j(z)),
/// precomputed for repeated evaluation.
class IteratedKernelDiag {
public:
    IteratedKernelDiag(const moments::GramMatrix& g, int p);
    double operator()(const Point& z) const;
    double operator()(Cplx z) const { return (*this)(Point{z}); }

private:
    kernels::MonomialBasis basis_;
    std::vector<Cplx> coefficient_;  // G^{p-1}, row-major
    int p_;
};

/// One-shot evaluation; p = 1 must match bergman_kernel_diag within the
/// truncation tail and is therefore restricted to points with radial
/// fraction <= 0.95, where the monomial sum converges at realistic orders.
double iterated_kernel_diag(const moments::GramMatrix& g, int p, const Point& z);

/// trace(G^m) for integer m >= 1.
double matrix_power_trace(const moments::GramMatrix& g, int m);

}  // namespace bergman::schatten
