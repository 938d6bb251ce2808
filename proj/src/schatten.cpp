#include "bergman/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bergman/error.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman::schatten {

using geometry::AmbientDomain;
using geometry::SubregionSpec;
using moments::GramMatrix;

namespace {

std::vector<Cplx> matmul(const std::vector<Cplx>& a, const std::vector<Cplx>& b, std::size_t n) {
    std::vector<Cplx> c(n * n, Cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Cplx aik = a[i * n + k];
            if (aik == Cplx(0, 0)) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

std::vector<Cplx> matrix_power(const GramMatrix& g, int m) {
    std::size_t n = g.size();
    std::vector<Cplx> acc(n * n, Cplx(0, 0));
    for (std::size_t j = 0; j < n; ++j) acc[j * n + j] = Cplx(1, 0);
    for (int i = 0; i < m; ++i) acc = matmul(acc, g.entries, n);
    return acc;
}

double radial_fraction(const AmbientDomain& ambient, const Point& z) {
    if (ambient.kind() == geometry::AmbientKind::Polydisc) {
        double f = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i)
            f = std::max(f, std::abs(z[i]) / ambient.radii()[i]);
        return f;
    }
    double r2 = 0.0;
    for (const Cplx& c : z) r2 += std::norm(c);
    return std::sqrt(r2);
}

quadrature::Result integrate_kernel_piece(const SubregionSpec& region,
                                          const AmbientDomain& ambient,
                                          const std::function<bool(Cplx)>& extra,
                                          const quadrature::Box& box,
                                          const quadrature::Options& opt) {
    auto inside = [&](Cplx z) {
        if (std::norm(z) >= 1.0) return false;
        if (extra && !extra(z)) return false;
        Point p{z};
        return geometry::contains(region, ambient, p);
    };
    auto f = [&](Cplx z) { return Cplx(kernels::bergman_kernel_diag(ambient, Point{z}), 0.0); };
    return quadrature::integrate(inside, f, box, opt);
}

TraceResult trace_compact(const SubregionSpec& region, const AmbientDomain& ambient,
                          std::size_t budget) {
    quadrature::Options opt;
    opt.budget = budget;
    opt.max_depth = 14;
    quadrature::Result r = integrate_kernel_piece(region, ambient, nullptr,
                                                  moments::bounding_box(region, ambient), opt);
    return TraceResult{r.value.real(), r.error, r.cells};
}

TraceResult trace_ideal_polygon(const geometry::IdealPolygonSpec& poly,
                                const SubregionSpec& region, const AmbientDomain& ambient,
                                std::size_t budget) {
    const std::vector<Cplx>& cusps = poly.vertices;
    double min_gap = 2.0;
    for (std::size_t i = 0; i < cusps.size(); ++i)
        for (std::size_t j = i + 1; j < cusps.size(); ++j)
            min_gap = std::min(min_gap, std::abs(cusps[i] - cusps[j]));
    double r0 = std::min(0.4, 0.25 * min_gap);
    const int rings = 24;
    std::size_t piece_budget = std::max<std::size_t>(budget / (cusps.size() * rings + 1), 4000);

    TraceResult total;
    // Core: everything at distance >= r0 from every cusp.
    {
        quadrature::Options opt;
        opt.budget = piece_budget * 4;
        opt.max_depth = 12;
        auto away = [&](Cplx z) {
            for (const Cplx& c : cusps)
                if (std::abs(z - c) < r0) return false;
            return true;
        };
        quadrature::Result r = integrate_kernel_piece(region, ambient, away,
                                                      quadrature::Box{-1, 1, -1, 1}, opt);
        total.value += r.value.real();
        total.error_estimate += r.error;
        total.cells += r.cells;
    }
    // Dyadic rings toward each cusp; ring k holds r0 2^{-k-1} <= |z-c| < r0 2^{-k}.
    for (const Cplx& cusp : cusps) {
        double prev_ring = 0.0, last_ring = 0.0;
        for (int k = 0; k < rings; ++k) {
            double dk = r0 * std::ldexp(1.0, -k);
            double dk1 = 0.5 * dk;
            quadrature::Options opt;
            opt.budget = piece_budget;
            opt.max_depth = 11;
            auto in_ring = [&](Cplx z) {
                double d = std::abs(z - cusp);
                return d >= dk1 && d < dk;
            };
            quadrature::Box box{std::max(cusp.real() - dk, -1.0), std::min(cusp.real() + dk, 1.0),
                                std::max(cusp.imag() - dk, -1.0), std::min(cusp.imag() + dk, 1.0)};
            quadrature::Result r = integrate_kernel_piece(region, ambient, in_ring, box, opt);
            total.value += r.value.real();
            total.error_estimate += r.error;
            total.cells += r.cells;
            prev_ring = last_ring;
            last_ring = r.value.real();
        }
        // Final-ring bound: the remaining cusp neighborhood is estimated by
        // geometric extrapolation of the measured decay.
        double q = prev_ring > 0.0 ? std::clamp(last_ring / prev_ring, 0.0, 0.9) : 0.5;
        total.error_estimate += last_ring * q / (1.0 - q);
    }
    return total;
}

TraceResult trace_shells(const SubregionSpec& region, const AmbientDomain& ambient,
                         std::size_t budget) {
    const int k_first = 3, k_last = 26;
    std::size_t piece_budget = std::max<std::size_t>(budget / (k_last - k_first + 2), 4000);
    TraceResult total;
    {
        quadrature::Options opt;
        opt.budget = piece_budget * 4;
        opt.max_depth = 12;
        double r_core = 1.0 - std::ldexp(1.0, -k_first);
        auto in_core = [&](Cplx z) { return std::abs(z) < r_core; };
        quadrature::Result r = integrate_kernel_piece(region, ambient, in_core,
                                                      moments::bounding_box(region, ambient), opt);
        total.value += r.value.real();
        total.error_estimate += r.error;
        total.cells += r.cells;
    }
    std::vector<double> shell_values;
    for (int k = k_first; k <= k_last; ++k) {
        double r_lo = 1.0 - std::ldexp(1.0, -k);
        double r_hi = 1.0 - std::ldexp(1.0, -(k + 1));
        quadrature::Options opt;
        opt.budget = piece_budget;
        opt.max_depth = std::min(k + 6, 26);
        auto in_shell = [&](Cplx z) {
            double a = std::abs(z);
            return a >= r_lo && a < r_hi;
        };
        quadrature::Result r = integrate_kernel_piece(region, ambient, in_shell,
                                                      moments::bounding_box(region, ambient), opt);
        double v = r.value.real();
        total.value += v;
        total.error_estimate += r.error;
        total.cells += r.cells;
        shell_values.push_back(v);

        // Non-decreasing contributions over 6 successive dyadic depths mean
        // the kernel mass near the boundary is not summable.
        if (shell_values.size() >= 6) {
            bool growing = true;
            std::size_t m = shell_values.size();
            for (std::size_t i = m - 5; i < m; ++i)
                if (shell_values[i] < shell_values[i - 1] || shell_values[i] <= 1e-14)
                    growing = false;
            if (growing)
                throw Error(ErrorCode::NonTraceClass,
                            "kernel integral refinement is not converging near the boundary",
                            std::to_string(v));
        }
        if (v < 1e-13 * std::max(1.0, total.value)) {
            double q = shell_values.size() >= 2 && shell_values[shell_values.size() - 2] > 0.0
                           ? std::clamp(v / shell_values[shell_values.size() - 2], 0.0, 0.9)
                           : 0.5;
            total.error_estimate += v * q / (1.0 - q);
            return total;
        }
    }
    double last = shell_values.back();
    double prev = shell_values[shell_values.size() - 2];
    if (prev > 0.0 && last >= prev)
        throw Error(ErrorCode::NonTraceClass,
                    "kernel integral refinement is not converging near the boundary",
                    std::to_string(last));
    double q = prev > 0.0 ? std::clamp(last / prev, 0.0, 0.9) : 0.5;
    total.error_estimate += last * q / (1.0 - q);
    return total;
}

bool compactly_contained(const SubregionSpec& region) {
    if (const auto* d = region.get_if<geometry::DiscSpec>())
        return std::abs(d->center) + d->radius < 1.0 - 1e-9;
    if (const auto* d = region.get_if<geometry::DilatedCopySpec>()) return d->rho < 1.0 - 1e-9;
    if (const auto* p = region.get_if<geometry::ProductRegionSpec>())
        return p->factors[0].second < 1.0 - 1e-9;
    return false;
}

}  // namespace

SchattenReport schatten_norm(const GramMatrix& g, double p, double tail_bound) {
    if (!std::isfinite(p) || !(p > 0.0))
        throw Error(ErrorCode::InvalidArgument, "Schatten exponent must be finite and positive");
    toeplitz::SpectrumEstimate spectrum = toeplitz::eigensolve(g);
    double power_sum = 0.0;
    for (double lambda : spectrum.eigenvalues)
        power_sum += std::pow(std::clamp(lambda, 0.0, 1.0), p);

    SchattenReport report;
    report.p = p;
    report.order = g.order;
    report.tail_bound = tail_bound;
    report.value_matrix = std::pow(power_sum, 1.0 / p);

    double p_rounded = std::round(p);
    if (std::abs(p - p_rounded) < 1e-12 && p_rounded >= 1.0 && p_rounded <= 16.0) {
        double power_trace = matrix_power_trace(g, static_cast<int>(p_rounded));
        report.power_path_deviation = std::abs(power_sum - power_trace);
        if (report.power_path_deviation > 1e-10)
            throw Error(ErrorCode::NonConvergence,
                        "eigenvalue and matrix-power Schatten paths disagree",
                        std::to_string(report.power_path_deviation));
    }
    return report;
}

double restriction_schatten_norm(const GramMatrix& g, double p) {
    return std::sqrt(schatten_norm(g, 2.0 * p).value_matrix);
}

double matrix_power_trace(const GramMatrix& g, int m) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "matrix power must be >= 1");
    std::vector<Cplx> power = matrix_power(g, m);
    std::size_t n = g.size();
    double trace = 0.0;
    for (std::size_t j = 0; j < n; ++j) trace += power[j * n + j].real();
    return trace;
}

TraceResult trace_by_formula(const SubregionSpec& region, const AmbientDomain& ambient,
                             std::size_t budget) {
    if (!ambient.is_disc_like())
        throw Error(ErrorCode::DimensionMismatch,
                    "the trace formula quadrature is restricted to the unit disc ambient");
    if (compactly_contained(region)) return trace_compact(region, ambient, budget);
    if (const auto* poly = region.get_if<geometry::IdealPolygonSpec>())
        return trace_ideal_polygon(*poly, region, ambient, budget);
    return trace_shells(region, ambient, budget);
}

IteratedKernelDiag::IteratedKernelDiag(const GramMatrix& g, int p)
    : basis_(kernels::make_basis(g.ambient, g.order)), p_(p) {
    if (p < 1) throw Error(ErrorCode::InvalidArgument, "iterated kernel order must be >= 1");
    coefficient_ = matrix_power(g, p - 1);
}

double IteratedKernelDiag::operator()(const Point& z) const {
    if (p_ == 1 && radial_fraction(basis_.ambient, z) > 0.95)
        throw Error(ErrorCode::DomainError,
                    "truncated kernel sums are only certified for radial fraction <= 0.95");
    std::vector<Cplx> v = basis_.evaluate(z);
    std::size_t n = v.size();
    Cplx acc(0, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Cplx row(0, 0);
        for (std::size_t k = 0; k < n; ++k) row += coefficient_[j * n + k] * v[k];
        acc += std::conj(v[j]) * row;
    }
    return acc.real();
}

double iterated_kernel_diag(const GramMatrix& g, int p, const Point& z) {
    return IteratedKernelDiag(g, p)(z);
}

}  // namespace bergman::schatten
