#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "test_util.hpp"

using namespace bergman;
using namespace bergman::geometry;

namespace {

const AmbientDomain kDisc = AmbientDomain::unit_disc();

bool in_region(const SubregionSpec& region, Cplx z) {
    return contains(region, kDisc, Point{z});
}

SubregionSpec cube_root_triangle() {
    std::vector<Cplx> roots;
    for (int k = 0; k < 3; ++k) roots.push_back(std::polar(1.0, 2.0 * kPi * k / 3.0));
    return SubregionSpec::ideal_polygon(std::move(roots));
}

}  // namespace

TEST_CASE("ambient domains validate and report dimensions") {
    CHECK(kDisc.dimension() == 1);
    CHECK(AmbientDomain::unit_ball(3).dimension() == 3);
    CHECK(AmbientDomain::polydisc({1.0, 0.5}).dimension() == 2);
    CHECK_THROWS_AS(AmbientDomain::unit_ball(0), Error);
    CHECK_THROWS_AS(AmbientDomain::polydisc({1.0, -1.0}), Error);
    CHECK_THROWS_AS(kDisc.contains(Point{Cplx(0, 0), Cplx(0, 0)}), Error);
}

TEST_CASE("horodisc membership examples") {
    SubregionSpec h = SubregionSpec::horodisc(0.0, 0.5);
    CHECK(in_region(h, Cplx(0.5, 0)));
    CHECK_FALSE(in_region(h, Cplx(-0.1, 0)));
}

TEST_CASE("horodisc and its disc spelling agree pointwise") {
    for (double theta : {0.0, 1.1, -2.4}) {
        for (double rho : {0.2, 0.5, 0.8}) {
            SubregionSpec h = SubregionSpec::horodisc(theta, rho);
            DiscSpec d = horodisc_as_disc(HorodiscSpec{theta, rho});
            SubregionSpec disc = SubregionSpec::disc(d.center, d.radius);
            for (std::uint64_t i = 0; i < 2000; ++i) {
                Cplx z = test_util::halton_square(i);
                if (std::abs(z) >= 1.0) continue;
                CHECK(in_region(h, z) == in_region(disc, z));
            }
        }
    }
}

TEST_CASE("geodesic side circles") {
    // a = 1, b = e^{2 pi i/3}: solving Re(conj(c) a) = Re(conj(c) b) = 1 gives
    // c = 2(1 + b), r = sqrt(3).
    Cplx b_vertex = std::polar(1.0, 2.0 * kPi / 3.0);
    auto side = geodesic_side_circle(Cplx(1, 0), b_vertex);
    REQUIRE(side.has_value());
    CHECK(std::abs(side->center - 2.0 * (Cplx(1, 0) + b_vertex)) < 1e-14);
    CHECK(side->radius == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

    auto quarter = geodesic_side_circle(Cplx(1, 0), Cplx(0, 1));
    REQUIRE(quarter.has_value());
    CHECK(std::abs(quarter->center - Cplx(1, 1)) < 1e-14);
    CHECK(quarter->radius == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_FALSE(geodesic_side_circle(Cplx(1, 0), Cplx(-1, 0)).has_value());
    CHECK_THROWS_AS(geodesic_side_circle(Cplx(1, 0), Cplx(1, 0)), Error);
}

TEST_CASE("side circles are orthogonal to the unit circle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        Cplx a = std::polar(1.0, angle(rng));
        Cplx b = std::polar(1.0, angle(rng));
        if (std::abs(a - b) < 1e-3) continue;
        auto side = geodesic_side_circle(a, b);
        REQUIRE(side.has_value());
        // |c| = 2/|a+b| blows up toward the diameter case, so the
        // orthogonality defect is measured relative to |c|^2.
        double scale = std::max(1.0, std::norm(side->center));
        CHECK(std::abs(std::norm(side->center) - side->radius * side->radius - 1.0) <
              1e-13 * scale);
        CHECK(std::abs(std::abs(a - side->center) - side->radius) < 1e-12 * std::sqrt(scale));
        if (std::abs(a + b) > 0.1)  // Euclidean radius below ~20
            CHECK(std::abs(std::norm(side->center) - side->radius * side->radius - 1.0) < 1e-13);
    }
}

TEST_CASE("ideal polygon membership") {
    SubregionSpec triangle = cube_root_triangle();
    // Derived via the orthogonal side circle through 1 and e^{2 pi i/3}:
    // |0 - 2(1 + e^{2 pi i/3})| = 2 > sqrt(3), so the origin lies inside.
    CHECK(in_region(triangle, Cplx(0, 0)));
    // The cusp spine runs along the real axis, so points there stay inside.
    CHECK(in_region(triangle, Cplx(0.95, 0)));
    // The arc midpoint direction is cut away: |0.95 e^{i pi/3} - 2 e^{i pi/3}|
    // = 1.05 < sqrt(3).
    CHECK_FALSE(in_region(triangle, 0.95 * std::polar(1.0, kPi / 3.0)));
    CHECK_FALSE(in_region(triangle, Cplx(2.0, 0)));

    // The ideal square of 4th roots of unity (four circle sides).
    SubregionSpec square =
        SubregionSpec::ideal_polygon({Cplx(1, 0), Cplx(0, 1), Cplx(-1, 0), Cplx(0, -1)});
    CHECK(in_region(square, Cplx(0, 0)));
    CHECK_FALSE(in_region(square, 0.9 * std::polar(1.0, kPi / 4.0)));

    // A polygon with a genuine diameter side: vertices 1, -1, i. The side
    // through 1 and -1 is the real diameter; the interior is the upper half.
    SubregionSpec half = SubregionSpec::ideal_polygon({Cplx(1, 0), Cplx(-1, 0), Cplx(0, 1)});
    CHECK(in_region(half, Cplx(0, 0.5)));
    CHECK_FALSE(in_region(half, Cplx(0, -0.5)));
    CHECK_FALSE(in_region(half, 0.9 * std::polar(1.0, kPi / 4.0)));  // cut by the i..1 arc
}

TEST_CASE("cayley transform") {
    CHECK(std::abs(cayley(Cplx(0, 0)) - Cplx(0, 1)) == 0.0);
    CHECK_THROWS_AS(cayley(Cplx(1, 0)), Error);
    CHECK_THROWS_AS(cayley(Cplx(0.8, 0.8)), Error);

    // Horocycle |z - (1 - rho)| = rho maps onto the line Im w = 1/rho - 1.
    for (double rho : {0.25, 0.5, 0.9}) {
        for (double t : {0.3, 2.0, 4.4}) {
            Cplx z = Cplx(1.0 - rho, 0) + std::polar(rho, t);
            CHECK(std::abs(cayley(z).imag() - (1.0 / rho - 1.0)) < 1e-12);
        }
    }
    // The real diameter maps to the positive imaginary axis.
    for (double x : {-0.9, 0.0, 0.9}) {
        Cplx w = cayley(Cplx(x, 0));
        CHECK(std::abs(w.real()) < 1e-14);
        CHECK(w.imag() > 0.0);
    }
    // Round trip.
    for (std::uint64_t i = 0; i < 500; ++i) {
        Cplx z = test_util::halton_square(i);
        if (std::abs(z) > 0.999) continue;
        CHECK(std::abs(cayley_inverse(cayley(z)) - z) < 1e-14);
    }
}

TEST_CASE("moebius maps are disc automorphisms") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        MoebiusMap map(test_util::random_in_disc(rng, 0.9), angle(rng));
        for (std::uint64_t i = 0; i < 300; ++i) {
            Cplx z = test_util::halton_square(i) * 0.999;
            if (std::abs(z) > 0.999) continue;
            CHECK(std::abs(map.apply(z)) < 1.0);
            CHECK(std::abs(map.apply(map.apply_inverse(z)) - z) < 1e-13);
            CHECK(std::abs(map.apply_inverse(map.apply(z)) - z) < 1e-13);
        }
    }
    CHECK_THROWS_AS(MoebiusMap(Cplx(1.0, 0), 0.0), Error);
}

TEST_CASE("exact disc images under moebius maps") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 25; ++trial) {
        MoebiusMap map(test_util::random_in_disc(rng, 0.7), angle(rng));
        Cplx center = test_util::random_in_disc(rng, 0.6);
        double radius = 0.05 + 0.3 * (1.0 - std::abs(center));
        DiscSpec image = map_disc(map, DiscSpec{center, radius});
        for (double t : {0.1, 1.3, 2.9, 4.2, 5.6}) {
            Cplx on_circle = center + std::polar(radius, t);
            CHECK(std::abs(std::abs(map.apply(on_circle) - image.center) - image.radius) < 1e-12);
        }
    }
}

TEST_CASE("lune wedge normalization") {
    SubregionSpec lune = SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.3, 1.9);
    auto [alpha, beta] = lune_to_wedge(*lune.get_if<HypercyclicLuneSpec>());
    CHECK(alpha == 0.3);
    CHECK(beta == 1.9);

    // Crescent form keeps beta = pi.
    SubregionSpec crescent = SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.4, kPi);
    CHECK(lune_to_wedge(*crescent.get_if<HypercyclicLuneSpec>()).second == kPi);

    // Rotated endpoints (A = -i, B = i): membership must agree with rotating
    // the point into the canonical frame first (conjugation by z -> -iz).
    SubregionSpec rotated = SubregionSpec::hypercyclic_lune(Cplx(0, -1), Cplx(0, 1), 0.7, 2.2);
    SubregionSpec canonical = SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.7, 2.2);
    auto [ra, rb] = lune_to_wedge(*rotated.get_if<HypercyclicLuneSpec>());
    CHECK(ra == 0.7);
    CHECK(rb == 2.2);
    for (std::uint64_t i = 0; i < 4000; ++i) {
        Cplx z = test_util::halton_square(i);
        if (std::abs(z) >= 0.999) continue;
        Cplx w = Cplx(0, -1) * z;  // -i z maps -i -> -1 and i -> 1
        CHECK(in_region(rotated, z) == in_region(canonical, w));
    }

    CHECK_THROWS_AS(SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 1.2, 0.3), Error);
    CHECK_THROWS_AS(SubregionSpec::hypercyclic_lune(Cplx(0.5, 0), Cplx(1, 0), 0.1, 0.3), Error);
}

TEST_CASE("lune in wedge-normal frame matches the cayley wedge") {
    // With endpoints (-1, 1) the normalizing map is the Cayley transform
    // itself, so membership is arg(cayley(z)) in (alpha, beta).
    SubregionSpec lune = SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.5, 2.0);
    for (std::uint64_t i = 0; i < 4000; ++i) {
        Cplx z = test_util::halton_square(i);
        if (std::abs(z) >= 0.999) continue;
        double theta = std::arg(cayley(z));
        bool expected = theta > 0.5 && theta < 2.0;
        CHECK(in_region(lune, z) == expected);
    }
}

TEST_CASE("complement membership is ambient minus inner closure") {
    std::vector<SubregionSpec> specs;
    specs.push_back(SubregionSpec::disc(Cplx(0.2, -0.1), 0.4));
    specs.push_back(SubregionSpec::horodisc(0.7, 0.35));
    specs.push_back(SubregionSpec::horocyclic_strip(0.0, 0.25, 0.5));
    specs.push_back(SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), 0.9, 2.3));
    specs.push_back(cube_root_triangle());
    specs.push_back(SubregionSpec::dilated_copy(0.6));
    specs.push_back(SubregionSpec::product_region({{0.3, 0.8}}));

    for (const SubregionSpec& spec : specs) {
        SubregionSpec comp = SubregionSpec::complement(spec);
        int tested = 0;
        for (std::uint64_t i = 0; i < 10000; ++i) {
            Cplx z = test_util::halton_square(i);
            Point p{z};
            // Exclude points within 1e-12 of any defining equality.
            if (contains(spec, kDisc, p, 0.0, 1e-12) != contains(spec, kDisc, p, 0.0, -1e-12))
                continue;
            if (kDisc.contains(p, 1e-12) != kDisc.contains(p, -1e-12)) continue;
            ++tested;
            bool expected = kDisc.contains(p) && !contains(spec, kDisc, p);
            CHECK(contains(comp, kDisc, p) == expected);
        }
        CHECK(tested > 9000);
    }
}

TEST_CASE("indicator regions require a bound predicate") {
    SubregionSpec bound = SubregionSpec::indicator(
        "left-half", [](const Point& z) { return z[0].real() < 0.0; });
    CHECK(in_region(bound, Cplx(-0.5, 0)));
    CHECK_FALSE(in_region(bound, Cplx(0.5, 0)));
    SubregionSpec unbound = SubregionSpec::indicator("mystery", nullptr);
    CHECK_THROWS_AS(in_region(unbound, Cplx(0, 0)), Error);
}

TEST_CASE("product region and dilation membership in higher dimension") {
    AmbientDomain bidisc = AmbientDomain::polydisc({1.0, 1.0});
    SubregionSpec hartogs_complementee =
        SubregionSpec::product_region({{0.0, 0.6}, {0.4, 1.0}});
    CHECK(contains(hartogs_complementee, bidisc, Point{Cplx(0.3, 0), Cplx(0.7, 0)}));
    CHECK_FALSE(contains(hartogs_complementee, bidisc, Point{Cplx(0.3, 0), Cplx(0.2, 0)}));
    CHECK_FALSE(contains(hartogs_complementee, bidisc, Point{Cplx(0.7, 0), Cplx(0.7, 0)}));

    AmbientDomain ball = AmbientDomain::unit_ball(2);
    SubregionSpec half = SubregionSpec::dilated_copy(0.5);
    CHECK(contains(half, ball, Point{Cplx(0.3, 0), Cplx(0.3, 0)}));
    CHECK_FALSE(contains(half, ball, Point{Cplx(0.4, 0), Cplx(0.4, 0)}));
}
