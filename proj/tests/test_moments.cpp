#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bergman/error.hpp"
#include "bergman/moments.hpp"
#include "test_util.hpp"

using namespace bergman;
using namespace bergman::moments;
using geometry::AmbientDomain;
using geometry::SubregionSpec;

namespace {

const AmbientDomain kDisc = AmbientDomain::unit_disc();

// Independent oracle for the disc moment: polar coordinates about the
// center, composite Gauss-Legendre radially (panel count scaled to the
// radial polynomial degree j + k + 1) and a trapezoid in angle (exact for
// the trigonometric polynomial of degree j + k). No binomial expansion
// anywhere.
Cplx polar_moment_oracle(Cplx c, double r, int j, int k) {
    static constexpr double nodes[8] = {-0.96028985649753623, -0.79666647741362674,
                                        -0.52553240991632899, -0.18343464249564980,
                                        0.18343464249564980,  0.52553240991632899,
                                        0.79666647741362674,  0.96028985649753623};
    static constexpr double weights[8] = {0.10122853629037626, 0.22238103445337447,
                                          0.31370664587788729, 0.36268378337836198,
                                          0.36268378337836198, 0.31370664587788729,
                                          0.22238103445337447, 0.10122853629037626};
    const int n_theta = 4 * (j + k) + 64;
    const int panels = (j + k) / 4 + 1;
    Cplx acc(0, 0);
    for (int panel = 0; panel < panels; ++panel) {
        double lo = r * panel / panels, hi = r * (panel + 1) / panels;
        for (int a = 0; a < 8; ++a) {
            double s = 0.5 * (hi - lo) * (nodes[a] + 1.0) + lo;
            double ws = 0.5 * (hi - lo) * weights[a] * s;  // includes the Jacobian s
            Cplx ring(0, 0);
            for (int t = 0; t < n_theta; ++t) {
                Cplx z = c + std::polar(s, 2.0 * kPi * t / n_theta);
                ring += powi(z, j) * std::conj(powi(z, k));
            }
            acc += ws * ring * (2.0 * kPi / n_theta);
        }
    }
    return acc;
}

GramMatrix gram_of(const SubregionSpec& region, int order,
                   Method method = Method::Auto, QuadratureParams quad = {}) {
    return gram(MomentRequest{kDisc, region, order, method, quad});
}

}  // namespace

TEST_CASE("disc moment closed-form examples") {
    // Centered discs: polar integration leaves only the m = j term.
    for (int j : {0, 1, 3}) {
        Cplx diag = disc_moment(kDisc, Cplx(0, 0), 0.5, j, j);
        CHECK(diag.real() ==
              doctest::Approx(kPi * std::pow(0.5, 2.0 * j + 2.0) / (j + 1.0)).epsilon(1e-15));
        CHECK(diag.imag() == 0.0);
    }
    CHECK(std::abs(disc_moment(kDisc, Cplx(0, 0), 0.5, 2, 1)) == 0.0);
    // Off-center first moment: only m = 0 survives, 0.3 * pi * 0.04.
    CHECK(std::abs(disc_moment(kDisc, Cplx(0.3, 0), 0.2, 1, 0) - Cplx(0.012 * kPi, 0)) < 1e-16);
    CHECK_THROWS_AS(disc_moment(kDisc, Cplx(0.9, 0), 0.2, 0, 0), Error);
}

TEST_CASE("disc moment formula validated against independent quadrature") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> degree(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Cplx c = test_util::random_in_disc(rng, 0.75);
        double r = (1.0 - std::abs(c)) * (0.2 + 0.75 * u(rng));
        int j = degree(rng), k = degree(rng);
        Cplx closed = disc_moment(kDisc, c, r, j, k);
        Cplx oracle = polar_moment_oracle(c, r, j, k);
        CHECK(std::abs(closed - oracle) < 1e-10);
    }
}

TEST_CASE("tangent horodisc moments stay finite and exact") {
    Cplx m = disc_moment(kDisc, Cplx(0.5, 0), 0.5, 40, 40);
    Cplx oracle = polar_moment_oracle(Cplx(0.5, 0), 0.5, 40, 40);
    CHECK(std::abs(m - oracle) < 1e-12 * std::abs(oracle) + 1e-14);
}

TEST_CASE("dilated copy gram is the closed-form diagonal") {
    GramMatrix g = gram_of(SubregionSpec::dilated_copy(0.5), 4);
    REQUIRE(g.size() == 4);
    const double expected[4] = {0.25, 0.0625, 0.015625, 0.00390625};
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(g.at(j, j).real() == doctest::Approx(expected[j]).epsilon(1e-15));
        for (std::size_t k = 0; k < 4; ++k)
            if (j != k) CHECK(std::abs(g.at(j, k)) == 0.0);
    }
    CHECK(g.error_estimate == 0.0);
}

TEST_CASE("complement gram is I minus the inner gram") {
    GramMatrix g =
        gram_of(SubregionSpec::complement(SubregionSpec::dilated_copy(0.5)), 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(g.at(j, j).real() ==
              doctest::Approx(1.0 - std::pow(0.5, 2.0 * j + 2.0)).epsilon(1e-15));
}

TEST_CASE("bidisc product region gram matches the product formula") {
    AmbientDomain bidisc = AmbientDomain::polydisc({1.0, 1.0});
    double rho1 = 0.6, rho2 = 0.4;
    GramMatrix g = gram(MomentRequest{
        bidisc, SubregionSpec::product_region({{0.0, rho1}, {rho2, 1.0}}), 5});
    for (std::size_t j = 0; j < g.size(); ++j) {
        const MultiIndex& alpha = g.index_list[j];
        double expected = std::pow(rho1, 2.0 * alpha[0] + 2.0) *
                          (1.0 - std::pow(rho2, 2.0 * alpha[1] + 2.0));
        CHECK(g.at(j, j).real() == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("quadrature recovers simple areas") {
    auto area = [](const SubregionSpec& region) {
        return quadrature_integral(region, kDisc, [](Cplx) { return Cplx(1, 0); }, 200000, 12);
    };
    auto dilated = area(SubregionSpec::dilated_copy(0.5));
    CHECK(std::abs(dilated.value.real() - kPi / 4.0) <= dilated.error_estimate);
    CHECK(dilated.error_estimate < 1e-3);

    auto horo = area(SubregionSpec::horodisc(0.0, 0.5));
    CHECK(std::abs(horo.value.real() - kPi / 4.0) <= horo.error_estimate);
}

TEST_CASE("ideal triangle area cross-checked by Monte Carlo") {
    std::vector<Cplx> roots;
    for (int k = 0; k < 3; ++k) roots.push_back(std::polar(1.0, 2.0 * kPi * k / 3.0));
    SubregionSpec triangle = SubregionSpec::ideal_polygon(roots);

    auto quad = quadrature_integral(triangle, kDisc, [](Cplx) { return Cplx(1, 0); }, 400000, 12);

    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 10000000;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Point z{Cplx(u(rng), u(rng))};
        if (geometry::contains(triangle, kDisc, z)) ++hits;
    }
    double p = static_cast<double>(hits) / n;
    double mc = 4.0 * p;
    double mc_sigma = 4.0 * std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(quad.value.real() - mc) < std::max(1e-3 * mc, 4.0 * mc_sigma));
}

TEST_CASE("closed-form and quadrature grams agree within the error estimate") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        Cplx c = test_util::random_in_disc(rng, 0.6);
        double r = (1.0 - std::abs(c)) * (0.25 + 0.6 * u(rng));
        SubregionSpec disc = SubregionSpec::disc(c, r);
        GramMatrix closed = gram_of(disc, 6, Method::ClosedForm);
        GramMatrix quad = gram_of(disc, 6, Method::Quadrature, QuadratureParams{100000, 10});
        REQUIRE(closed.size() == quad.size());
        CHECK(quad.error_estimate > 0.0);
        for (std::size_t j = 0; j < closed.size(); ++j)
            for (std::size_t k = 0; k < closed.size(); ++k)
                CHECK(std::abs(closed.at(j, k) - quad.at(j, k)) <= quad.error_estimate);
    }
}

TEST_CASE("complement identity holds for closed-form and quadrature regions") {
    std::vector<SubregionSpec> regions;
    regions.push_back(SubregionSpec::dilated_copy(0.5));
    regions.push_back(SubregionSpec::disc(Cplx(0.3, 0.1), 0.2));
    regions.push_back(SubregionSpec::horocyclic_strip(0.4, 0.25, 0.5));
    regions.push_back(SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.8, 2.1));
    for (const SubregionSpec& region : regions) {
        QuadratureParams quad{60000, 9};
        GramMatrix g = gram_of(region, 6, Method::Auto, quad);
        GramMatrix gc = gram_of(SubregionSpec::complement(region), 6, Method::Auto, quad);
        double tol = std::max(1e-10, g.error_estimate + gc.error_estimate);
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k) {
                Cplx expected = j == k ? Cplx(1, 0) : Cplx(0, 0);
                CHECK(std::abs(g.at(j, k) + gc.at(j, k) - expected) <= tol);
            }
    }
}

TEST_CASE("gram matrices are hermitian with unit-interval diagonals") {
    std::vector<SubregionSpec> regions;
    regions.push_back(SubregionSpec::horodisc(1.2, 0.5));
    regions.push_back(SubregionSpec::horocyclic_strip(0.0, 0.3, 0.7));
    regions.push_back(SubregionSpec::disc(Cplx(0.2, 0.4), 0.3));
    for (const SubregionSpec& region : regions) {
        GramMatrix g = gram_of(region, 24);
        for (std::size_t j = 0; j < g.size(); ++j) {
            CHECK(g.at(j, j).imag() == 0.0);
            CHECK(g.at(j, j).real() >= 0.0);
            CHECK(g.at(j, j).real() <= 1.0);
            for (std::size_t k = 0; k < g.size(); ++k)
                CHECK(std::abs(g.at(j, k) - std::conj(g.at(k, j))) < 1e-13);
        }
    }
}

TEST_CASE("horodisc diagonal entries grow with the radius") {
    std::vector<double> rhos{0.2, 0.35, 0.5, 0.65, 0.8};
    std::vector<GramMatrix> grams;
    for (double rho : rhos) grams.push_back(gram_of(SubregionSpec::horodisc(0.0, rho), 12));
    for (std::size_t i = 1; i < grams.size(); ++i)
        for (std::size_t j = 0; j < grams[i].size(); ++j)
            CHECK(grams[i].at(j, j).real() >= grams[i - 1].at(j, j).real() - 1e-15);
}

TEST_CASE("rotationally symmetric regions have diagonal grams") {
    std::vector<SubregionSpec> regions;
    regions.push_back(SubregionSpec::disc(Cplx(0, 0), 0.4));
    regions.push_back(SubregionSpec::product_region({{0.3, 0.8}}));
    regions.push_back(SubregionSpec::dilated_copy(0.6));
    for (const SubregionSpec& region : regions) {
        GramMatrix g = gram_of(region, 10);
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k)
                if (j != k) CHECK(std::abs(g.at(j, k)) <= 1e-13);
    }
}

TEST_CASE("rotation conjugation leaves horodisc spectra data consistent") {
    // G_rot[j][k] = e^{i(j-k)theta} G_0[j][k] exactly.
    GramMatrix base = gram_of(SubregionSpec::horodisc(0.0, 0.4), 10);
    double theta = 1.3;
    GramMatrix rotated = gram_of(SubregionSpec::horodisc(theta, 0.4), 10);
    for (std::size_t j = 0; j < base.size(); ++j)
        for (std::size_t k = 0; k < base.size(); ++k) {
            Cplx expected =
                base.at(j, k) * std::polar(1.0, theta * (static_cast<double>(j) - static_cast<double>(k)));
            CHECK(std::abs(rotated.at(j, k) - expected) < 1e-15);
        }
}

TEST_CASE("singular integrand samples are reported") {
    CHECK_THROWS_AS(
        quadrature_integral(
            SubregionSpec::dilated_copy(0.5), kDisc,
            [](Cplx z) {
                return std::abs(z) < 0.1 ? Cplx(std::numeric_limits<double>::infinity(), 0)
                                         : Cplx(1, 0);
            },
            50000, 8),
        Error);
}

TEST_CASE("closed-form request on a quadrature-only region fails loudly") {
    std::vector<Cplx> roots;
    for (int k = 0; k < 3; ++k) roots.push_back(std::polar(1.0, 2.0 * kPi * k / 3.0));
    CHECK_THROWS_AS(
        gram_of(SubregionSpec::ideal_polygon(roots), 4, Method::ClosedForm), Error);
}
