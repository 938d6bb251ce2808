#pragma once

#include <cstddef>
#include <functional>

#include "bergman/types.hpp"

namespace bergman::quadrature {

struct Box {
    double x0, x1, y0, y1;
    double area() const { return (x1 - x0) * (y1 - y0); }
};

struct Options {
    std::size_t budget = 200000;  // max processed cells
    int max_depth = 12;
    double rel_tol = 1e-12;  // interior-cell finalization threshold
};

struct Result {
    Cplx value{0.0, 0.0};
    double error = 0.0;
    bool truncated = false;
    std::size_t cells = 0;
};

using Membership = std::function<bool(Cplx)>;
using Integrand = std::function<Cplx(Cplx)>;

/// Adaptive cell quadrature of f over {z in root : inside(z)}, planar only.
/// Cells classify against the indicator on a fixed 8x8 sub-grid plus
/// corners. Fully inside cells use tensor Gauss-Legendre of order 8 and
/// finalize when the refined/coarse difference passes rel_tol; straddling
/// cells refine to max_depth and then contribute Gauss-Legendre with the
/// indicator sampled at the nodes, adding a cell-volume-times-local-bound
/// term to the error estimate. Traversal order is fixed, so results are
/// bitwise reproducible. Throws SingularSample on a non-finite integrand
/// value at an inside node.
Result integrate(const Membership& inside, const Integrand& f, const Box& root,
                 const Options& opt);

}  // namespace bergman::quadrature
