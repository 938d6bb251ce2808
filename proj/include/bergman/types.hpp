#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bergman {

using Cplx = std::complex<double>;

/// A point of C^n, one complex coordinate per axis.
using Point = std::vector<Cplx>;

/// Multi-index alpha in Z_+^n.
using MultiIndex = std::vector<int>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// z^k by binary exponentiation, k >= 0.
inline Cplx powi(Cplx z, int k) {
    Cplx r{1.0, 0.0};
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

inline double powi(double x, int k) {
    double r = 1.0;
    while (k > 0) {
        if (k & 1) r *= x;
        x *= x;
        k >>= 1;
    }
    return r;
}

inline int total_degree(const MultiIndex& alpha) {
    int d = 0;
    for (int a : alpha) d += a;
    return d;
}

inline Point point1(Cplx z) { return Point{z}; }

}  // namespace bergman
