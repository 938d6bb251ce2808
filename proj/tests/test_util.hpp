#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace test_util {

using Cplx = std::complex<double>;

// Deterministic low-discrepancy samples on [-1, 1]^2 (Halton bases 2 and 3).
inline double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    for (std::uint64_t i = index + 1; i > 0; i /= base) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
    }
    return r;
}

inline Cplx halton_square(std::uint64_t index) {
    return {2.0 * halton(index, 2) - 1.0, 2.0 * halton(index, 3) - 1.0};
}

inline Cplx random_in_disc(std::mt19937_64& rng, double max_radius = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Cplx z(u(rng), u(rng));
        if (std::abs(z) < 1.0) return z * max_radius;
    }
}

}  // namespace test_util
