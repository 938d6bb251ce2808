#include "bergman/quadrature.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "bergman/error.hpp"

namespace bergman::quadrature {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899, -0.18343464249564980,
    0.18343464249564980,  0.52553240991632899,  0.79666647741362674,  0.96028985649753623};
constexpr std::array<double, 8> kGlWeights = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729, 0.36268378337836198,
    0.36268378337836198, 0.31370664587788729, 0.22238103445337447, 0.10122853629037626};

enum class CellClass { Inside, Outside, Straddling };

struct Engine {
    const Membership& inside;
    const Integrand& f;
    Options opt;
    Result out;

    [[noreturn]] void singular(Cplx z) const {
        std::ostringstream o;
        o << "non-finite integrand sample at (" << z.real() << ", " << z.imag() << ")";
        throw Error(ErrorCode::SingularSample, o.str());
    }

    // Fixed 8x8 interior sub-grid plus the four corners.
    CellClass classify(const Box& b, Cplx* sample_inside) const {
        int in = 0, total = 0;
        auto probe = [&](double x, double y) {
            ++total;
            if (inside(Cplx(x, y))) {
                ++in;
                if (sample_inside && in == 1) *sample_inside = Cplx(x, y);
            }
        };
        for (int i = 0; i < 8; ++i) {
            double x = b.x0 + (b.x1 - b.x0) * (i + 0.5) / 8.0;
            for (int j = 0; j < 8; ++j) probe(x, b.y0 + (b.y1 - b.y0) * (j + 0.5) / 8.0);
        }
        probe(b.x0, b.y0);
        probe(b.x1, b.y0);
        probe(b.x0, b.y1);
        probe(b.x1, b.y1);
        if (in == 0) return CellClass::Outside;
        if (in == total) return CellClass::Inside;
        return CellClass::Straddling;
    }

    // Gauss-Legendre with the indicator sampled at the nodes. Also reports
    // the largest |f| seen at an inside node, for straddle bounds.
    Cplx gl_masked(const Box& b, double* max_abs) const {
        double hx = 0.5 * (b.x1 - b.x0), cx = 0.5 * (b.x1 + b.x0);
        double hy = 0.5 * (b.y1 - b.y0), cy = 0.5 * (b.y1 + b.y0);
        Cplx acc(0, 0);
        double m = 0.0;
        for (int i = 0; i < 8; ++i) {
            double x = cx + hx * kGlNodes[i];
            for (int j = 0; j < 8; ++j) {
                Cplx z(x, cy + hy * kGlNodes[j]);
                if (!inside(z)) continue;
                Cplx v = f(z);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) singular(z);
                double a = std::abs(v);
                if (a > m) m = a;
                acc += kGlWeights[i] * kGlWeights[j] * v;
            }
        }
        if (max_abs) *max_abs = m;
        return acc * (hx * hy);
    }

    static std::array<Box, 4> split(const Box& b) {
        double xm = 0.5 * (b.x0 + b.x1), ym = 0.5 * (b.y0 + b.y1);
        return {Box{b.x0, xm, b.y0, ym}, Box{xm, b.x1, b.y0, ym}, Box{b.x0, xm, ym, b.y1},
                Box{xm, b.x1, ym, b.y1}};
    }

    void finalize_straddle(const Box& b, Cplx sample) {
        double local_bound = 0.0;
        out.value += gl_masked(b, &local_bound);
        if (local_bound == 0.0) {
            // No inside Gauss node; fall back to the classification sample.
            Cplx v = f(sample);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) singular(sample);
            local_bound = std::abs(v);
        }
        out.error += b.area() * local_bound;
    }

    void process(const Box& b, int depth, bool have_coarse, Cplx coarse) {
        Cplx sample(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
        CellClass cls = classify(b, &sample);
        if (cls == CellClass::Outside) return;
        ++out.cells;
        if (out.cells >= opt.budget) {
            out.truncated = true;
            finalize_straddle(b, sample);
            return;
        }
        if (cls == CellClass::Straddling) {
            if (depth >= opt.max_depth) {
                finalize_straddle(b, sample);
                return;
            }
            for (const Box& child : split(b)) process(child, depth + 1, false, Cplx(0, 0));
            return;
        }
        // Fully inside: compare one refinement level against the cell rule.
        if (!have_coarse) coarse = gl_masked(b, nullptr);
        auto children = split(b);
        std::array<Cplx, 4> child_values;
        Cplx refined(0, 0);
        for (int i = 0; i < 4; ++i) {
            child_values[i] = gl_masked(children[i], nullptr);
            refined += child_values[i];
        }
        double diff = std::abs(refined - coarse);
        if (depth >= opt.max_depth ||
            diff <= opt.rel_tol * std::abs(refined) + 1e-16 * b.area()) {
            out.value += refined;
            out.error += diff;
            return;
        }
        for (int i = 0; i < 4; ++i) process(children[i], depth + 1, true, child_values[i]);
    }
};

}  // namespace

Result integrate(const Membership& inside, const Integrand& f, const Box& root,
                 const Options& opt) {
    Engine engine{inside, f, opt, {}};
    engine.process(root, 0, false, Cplx(0, 0));
    return engine.out;
}

}  // namespace bergman::quadrature
