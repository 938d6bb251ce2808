#include "bergman/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bergman/error.hpp"

namespace bergman::oracles {

namespace {

constexpr double kGoldenRatio = 0.61803398874989485;

// Best grid point of f on [lo, hi] with `count` samples; returns the index.
std::size_t grid_argmax(const std::function<double(double)>& f, double lo, double step,
                        std::size_t count, double* best_value) {
    std::size_t best = 0;
    double best_f = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        double v = f(lo + step * i);
        if (v > best_f) {
            best_f = v;
            best = i;
        }
    }
    if (best_value) *best_value = best_f;
    return best;
}

}  // namespace

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double x_tol) {
    double a = lo, b = hi;
    double x1 = b - kGoldenRatio * (b - a);
    double x2 = a + kGoldenRatio * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGoldenRatio * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGoldenRatio * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

OracleResult dilation_spectrum(int n, double rho) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::InvalidArgument, "dilation factor must lie in (0,1)");
    EigenvalueSequence seq;
    seq.generator = [n, rho](int degree) { return std::pow(rho, 2.0 * (degree + n)); };
    seq.restriction_norm = std::pow(rho, n);
    return OracleResult{seq, "dilated Reinhardt spectrum, lambda = rho^{2(|alpha|+n)}"};
}

OracleResult offcenter_disc_spectrum(Cplx z0, double r) {
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "disc radius must be positive");
    double s = std::abs(z0);
    if (!(s + r < 1.0))
        throw Error(ErrorCode::DomainError,
                    "disc must be compactly contained; at tangency the spectrum is not discrete");
    double a2 = (1.0 + s + r) * (1.0 - s + r) / ((1.0 - s - r) * (1.0 + s - r));
    double big_a = std::sqrt(a2);
    double ratio = (big_a - 1.0) / (big_a + 1.0);
    EigenvalueSequence seq;
    seq.generator = [ratio](int k) { return std::pow(ratio, 2.0 * k + 2.0); };
    seq.restriction_norm = ratio;
    return OracleResult{seq, "compactly contained subdisc spectrum, lambda_k = ((A-1)/(A+1))^{2k+2}"};
}

double gamma_strip(double a_lo, double a_hi, double x) {
    if (!(a_lo > 0.0) || !(a_hi > a_lo))
        throw Error(ErrorCode::InvalidArgument, "strip requires 0 < a_lo < a_hi");
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma_strip requires x > 0");
    if (std::isinf(a_hi)) return std::exp(-2.0 * x * a_lo);
    return -std::exp(-2.0 * x * a_lo) * std::expm1(-2.0 * x * (a_hi - a_lo));
}

double horostrip_alpha(double rho1, double rho2) {
    if (!(0.0 < rho1 && rho1 < rho2 && rho2 < 1.0))
        throw Error(ErrorCode::InvalidArgument, "horostrip requires 0 < rho1 < rho2 < 1");
    return (1.0 / rho1 - 1.0) / (1.0 / rho2 - 1.0);
}

double horostrip_numeric_sup(double rho1, double rho2) {
    double alpha = horostrip_alpha(rho1, rho2);
    // Bracketing grid plus golden section over x; the critical point
    // ln(alpha)/(2(alpha-1)) always lies below 1/2.
    auto gamma = [alpha](double x) { return gamma_strip(1.0, alpha, x); };
    double x_max = 4.0;
    const std::size_t grid = 512;
    double step = x_max / grid;
    double grid_best = 0.0;
    std::size_t at = grid_argmax(gamma, step, step, grid, &grid_best);  // samples step*(1+i)
    double lo = step * at;  // one sample left of the grid max, 0 at the edge
    double hi_x = step * (at + 2);
    double x_star = golden_section_max(gamma, lo, hi_x, 1e-12);
    return std::max(gamma(x_star), grid_best);
}

OracleResult horostrip_interval(double rho1, double rho2) {
    double alpha = horostrip_alpha(rho1, rho2);
    // hi = alpha^{-1/(alpha-1)} - alpha^{-alpha/(alpha-1)} = (alpha-1) alpha^{-alpha/(alpha-1)}
    double log_factor = std::log(alpha) / (alpha - 1.0);
    double hi = -std::exp(-log_factor) * std::expm1(-std::log(alpha));
    double numeric = horostrip_numeric_sup(rho1, rho2);
    if (std::abs(numeric - hi) > 1e-10)
        throw Error(ErrorCode::NonConvergence,
                    "horostrip endpoint disagrees with the numeric supremum",
                    std::to_string(std::abs(numeric - hi)));
    return OracleResult{Interval{0.0, hi}, "horocyclic strip spectrum [0, a^{-1/(a-1)} - a^{-a/(a-1)}]"};
}

double gamma_wedge_logxi(double a, double b, double t) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "wedge angles require 0 <= a < b <= 1");
    if (t == 0.0) return b - a;
    // (xi^b - xi^a)/(xi - 1) = e^{(b-1)t} (1 - e^{(a-b)t}) / (1 - e^{-t});
    // both expm1 arguments share the sign of -t, so the log of each factor
    // is finite and the result lives in (0, 1].
    auto log_abs_expm1 = [](double x) {
        return x > 36.0 ? x : std::log(std::abs(std::expm1(x)));
    };
    double log_num = log_abs_expm1((a - b) * t);
    double log_den = log_abs_expm1(-t);
    return std::exp((b - 1.0) * t + log_num - log_den);
}

double gamma_wedge(double a, double b, double lambda) {
    return gamma_wedge_logxi(a, b, -2.0 * kPi * lambda);
}

double lune_grid_sup(double a, double b) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "wedge angles require 0 <= a < b <= 1");
    const double step = 0.01;
    double range = 40.0;
    auto sup_on = [&](double r) {
        double best = 0.0;
        std::size_t count = static_cast<std::size_t>(2.0 * r / step) + 1;
        grid_argmax([&](double t) { return gamma_wedge_logxi(a, b, t); }, -r, step, count, &best);
        return best;
    };
    double sup = sup_on(range);
    bool crescent = (a == 0.0) || (b == 1.0);
    if (crescent) {
        // The supremum 1 is only approached as |t| -> inf; widen until the
        // grid value saturates.
        while (sup < 1.0 - 1e-3 && range < 4096.0) {
            range *= 2.0;
            double wider = sup_on(range);
            if (wider <= sup + 1e-15) break;
            sup = wider;
        }
    }
    return sup;
}

OracleResult lune_norm(double a, double b) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "wedge angles require 0 <= a < b <= 1");
    bool crescent = (a == 0.0) || (b == 1.0);
    if (crescent) {
        double sup = lune_grid_sup(a, b);
        if (sup < 1.0 - 1e-3)
            throw Error(ErrorCode::NonConvergence,
                        "crescent grid supremum failed to approach 1", std::to_string(sup));
        return OracleResult{Interval{0.0, 1.0}, "hypercyclic crescent spectrum [0, 1]"};
    }
    auto f = [a, b](double t) { return gamma_wedge_logxi(a, b, t); };
    const double step = 0.01, range = 40.0;
    std::size_t count = static_cast<std::size_t>(2.0 * range / step) + 1;
    double grid_best = 0.0;
    std::size_t at = grid_argmax(f, -range, step, count, &grid_best);
    double lo = -range + step * (at == 0 ? 0 : at - 1);
    double hi = -range + step * std::min(at + 1, count - 1);
    double t_star = golden_section_max(f, lo, hi, 1e-12);
    double c = std::max(f(t_star), grid_best);
    return OracleResult{Interval{0.0, c}, "hypercyclic lune spectrum [0, c(pi a, pi b)]"};
}

OracleResult ball_bounds(int n, double R, double r, double delta) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (!(r > 0.0 && R > 0.0 && delta > 0.0))
        throw Error(ErrorCode::InvalidArgument, "radii must be positive");
    if (!(r <= delta + 1e-15 && delta <= R + 1e-15))
        throw Error(ErrorCode::InvalidArgument, "ball bounds require r <= delta <= R");
    NormBounds bounds;
    bounds.lower = std::pow(r / R, n);
    bounds.upper = n == 1 ? 1.0 : std::pow(delta / R, 0.5 * (n - 1.0));
    return OracleResult{bounds, "ball restriction bounds (r/R)^n <= ||R_U|| <= (delta/R)^{(n-1)/2}"};
}

double slice_norm(int n, double r, double delta, Cplx z) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (!(r > 0.0 && r <= delta + 1e-15 && delta <= 1.0 + 1e-15))
        throw Error(ErrorCode::InvalidArgument, "slice norm requires 0 < r <= delta <= 1");
    double num = r * r - std::norm(z - Cplx(delta, 0));
    if (!(num > 0.0))
        throw Error(ErrorCode::DomainError, "z lies outside the projected disc |z - delta| < r");
    double den = 1.0 - std::norm(z - Cplx(1, 0));
    return std::pow(num / den, 0.5 * (n - 1.0));
}

}  // namespace bergman::oracles
