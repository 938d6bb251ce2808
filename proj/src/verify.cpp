#include "bergman/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "bergman/moments.hpp"
#include "bergman/oracles.hpp"
#include "bergman/schatten.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman::verify {

using geometry::AmbientDomain;
using geometry::SubregionSpec;
using moments::GramMatrix;
using moments::MomentRequest;

namespace {

struct Builder {
    CaseReport report;

    explicit Builder(std::string name, std::string summary) {
        report.name = std::move(name);
        report.summary = std::move(summary);
        report.passed = true;
    }

    void check(const std::string& name, double observed, double bound) {
        bool ok = observed <= bound;
        report.checks.push_back({name, ok, observed, bound});
        report.passed = report.passed && ok;
    }

    void check_true(const std::string& name, bool ok) {
        report.checks.push_back({name, ok, ok ? 1.0 : 0.0, 1.0});
        report.passed = report.passed && ok;
    }
};

GramMatrix gram_of(const AmbientDomain& ambient, const SubregionSpec& region, int order) {
    return moments::gram(MomentRequest{ambient, region, order});
}

SubregionSpec ideal_triangle() {
    std::vector<Cplx> roots;
    for (int k = 0; k < 3; ++k) roots.push_back(std::polar(1.0, 2.0 * kPi * k / 3.0));
    return SubregionSpec::ideal_polygon(std::move(roots));
}

// 1. Dilation spectrum: exact diagonal rho^{2k+2} at N = 16.
CaseReport case_dilation(std::uint64_t) {
    Builder b("dilation", "DilatedCopy(0.5) Gram is diag(0.5^{2k+2}) at N=16");
    GramMatrix g = gram_of(AmbientDomain::unit_disc(), SubregionSpec::dilated_copy(0.5), 16);
    double diag_dev = 0.0, offdiag_dev = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (j == k)
                diag_dev = std::max(diag_dev,
                                    std::abs(g.at(j, j).real() - std::pow(0.5, 2.0 * j + 2.0)));
            else
                offdiag_dev = std::max(offdiag_dev, std::abs(g.at(j, k)));
        }
    b.check("max |G_kk - 0.5^{2k+2}|", diag_dev, 1e-13);
    b.check("max off-diagonal |G_jk|", offdiag_dev, 1e-13);
    return b.report;
}

// 2. Off-center subdisc against the closed-form spectrum.
CaseReport case_offcenter(std::uint64_t) {
    Builder b("offcenter-disc", "Disc(0.3, 0.2) Galerkin eigenvalues match the closed form at N=80");
    auto oracle = oracles::offcenter_disc_spectrum(Cplx(0.3, 0), 0.2).sequence();
    auto spectrum = toeplitz::eigensolve(
        gram_of(AmbientDomain::unit_disc(), SubregionSpec::disc(Cplx(0.3, 0), 0.2), 80));
    b.check("top eigenvalue relative error",
            std::abs(spectrum.eigenvalues[0] - oracle.generator(0)) / oracle.generator(0), 1e-6);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k)
        worst = std::max(worst,
                         std::abs(spectrum.eigenvalues[k] - oracle.generator(k)) / oracle.generator(k));
    b.check("top-5 relative error", worst, 1e-4);
    return b.report;
}

// 3. Horostrip endpoint: closed form vs golden-section supremum.
CaseReport case_horostrip(std::uint64_t seed) {
    Builder b("horostrip", "Thm-style strip endpoint agrees with the numeric supremum");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double rho2 = 0.15 + 0.8 * u(rng);
        double rho1 = rho2 * (0.05 + 0.9 * u(rng));
        double closed = oracles::horostrip_interval(rho1, rho2).interval().hi;
        double numeric = oracles::horostrip_numeric_sup(rho1, rho2);
        worst = std::max(worst, std::abs(closed - numeric));
    }
    b.check("max |closed form - golden section| over 50 samples", worst, 1e-10);
    double quarter_half = oracles::horostrip_interval(0.25, 0.5).interval().hi;
    b.check("(1/4, 1/2) endpoint vs 2/(3 sqrt(3))",
            std::abs(quarter_half - 2.0 / (3.0 * std::sqrt(3.0))), 1e-12);
    return b.report;
}

// 4. Strip compression eigenvalues stay inside the oracle interval.
CaseReport case_strip_containment(std::uint64_t) {
    Builder b("strip-containment",
              "HorocyclicStrip(1/4, 1/2) eigenvalues lie in [0, endpoint + 5e-3] for N in {32,64,128}");
    double endpoint = oracles::horostrip_interval(0.25, 0.5).interval().hi;
    SubregionSpec strip = SubregionSpec::horocyclic_strip(0.0, 0.25, 0.5);
    double prev_top = 0.0;
    for (int order : {32, 64, 128}) {
        auto spectrum = toeplitz::eigensolve(gram_of(AmbientDomain::unit_disc(), strip, order));
        double floor = -(spectrum.solver_residual + 1e-12);
        b.check("N=" + std::to_string(order) + " max eigenvalue - endpoint",
                spectrum.eigenvalues.front() - endpoint, 5e-3);
        b.check("N=" + std::to_string(order) + " negative excursion", floor - spectrum.eigenvalues.back(),
                0.0);
        b.check_true("N=" + std::to_string(order) + " top nondecreasing",
                     spectrum.eigenvalues.front() >= prev_top - 1e-12);
        prev_top = std::max(prev_top, spectrum.eigenvalues.front());
    }
    return b.report;
}

// 5. Lune strictness and the crescent limit.
CaseReport case_lune(std::uint64_t) {
    Builder b("lune", "lune_norm < 1 - 1e-6 on the interior grid; crescent sup approaches 1");
    double worst_hi = 0.0;
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) {
            double hi = oracles::lune_norm(i / 10.0, j / 10.0).interval().hi;
            worst_hi = std::max(worst_hi, hi);
        }
    b.check("max interior lune endpoint", worst_hi, 1.0 - 1e-6);
    double worst_crescent = 1.0;
    for (int j = 1; j <= 9; ++j) {
        auto result = oracles::lune_norm(0.0, j / 10.0);
        if (result.interval().hi != 1.0) worst_crescent = -1.0;
        worst_crescent = std::min(worst_crescent, oracles::lune_grid_sup(0.0, j / 10.0));
    }
    b.check("crescent grid sup shortfall", 1.0 - worst_crescent, 1e-3);
    return b.report;
}

// 6. Complement identity at the matrix level.
CaseReport case_complement(std::uint64_t) {
    Builder b("complement", "gram(U) + gram(complement U) = I entrywise at N=32");
    AmbientDomain disc = AmbientDomain::unit_disc();
    std::vector<std::pair<std::string, SubregionSpec>> regions;
    regions.emplace_back("DilatedCopy(0.5)", SubregionSpec::dilated_copy(0.5));
    regions.emplace_back("Disc(0.3, 0.2)", SubregionSpec::disc(Cplx(0.3, 0), 0.2));
    regions.emplace_back("HorocyclicStrip(1/4, 1/2)",
                         SubregionSpec::horocyclic_strip(0.0, 0.25, 0.5));
    for (auto& [name, region] : regions) {
        GramMatrix g = gram_of(disc, region, 32);
        GramMatrix gc = gram_of(disc, SubregionSpec::complement(region), 32);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k) {
                Cplx sum = g.at(j, k) + gc.at(j, k);
                Cplx expected = j == k ? Cplx(1, 0) : Cplx(0, 0);
                dev = std::max(dev, std::abs(sum - expected));
            }
        b.check(name + " entrywise deviation from I", dev, 1e-10);
    }
    return b.report;
}

// 7. Ideal-triangle trace.
CaseReport case_ideal_triangle(std::uint64_t) {
    Builder b("ideal-triangle", "trace of T over the ideal triangle is 1/4 within 2%");
    auto trace = schatten::trace_by_formula(ideal_triangle(), AmbientDomain::unit_disc());
    b.check("relative deviation from 1/4", std::abs(trace.value - 0.25) / 0.25, 0.02);
    b.check("sqrt(trace) vs 1/2", std::abs(std::sqrt(trace.value) - 0.5), 0.01);
    return b.report;
}

// 8. Schatten norms: tail-bounded trace, path agreement, iterated kernel.
CaseReport case_schatten(std::uint64_t) {
    Builder b("schatten", "Schatten paths agree and the S_1 value hits the geometric series");
    AmbientDomain disc = AmbientDomain::unit_disc();
    const double rho = 0.5;
    const int order = 40;
    GramMatrix g = gram_of(disc, SubregionSpec::dilated_copy(rho), order);
    double tail = std::pow(rho, 2.0 * order + 2.0) / (1.0 - rho * rho);
    auto s1 = schatten::schatten_norm(g, 1.0, tail);
    b.check("|S_1 - 1/3|", std::abs(s1.value_matrix - 1.0 / 3.0), 1e-8);
    for (double p : {1.0, 2.0, 3.0}) {
        auto report = schatten::schatten_norm(g, p);
        b.check("p=" + std::to_string(static_cast<int>(p)) + " path deviation",
                report.power_path_deviation, 1e-10);
    }
    schatten::IteratedKernelDiag b3(g, 3);
    auto integral = moments::quadrature_integral(
        SubregionSpec::disc(Cplx(0, 0), 1.0), disc, [&](Cplx z) { return Cplx(b3(z), 0.0); },
        300000, 10);
    double trace_g2 = schatten::matrix_power_trace(g, 2);
    b.check("|int B^{(3)} - trace(G^2)| - quadrature error",
            std::abs(integral.value.real() - trace_g2) - integral.error_estimate, 1e-8);
    return b.report;
}

// 9. Ball bounds, the constant-function Rayleigh quotient, and slice norms.
CaseReport case_ball_bounds(std::uint64_t seed) {
    Builder b("ball-bounds", "ball norm bounds, exact Rayleigh quotient, slice-norm sweep");
    auto bounds = oracles::ball_bounds(2, 1.0, 0.5, 0.5).bounds();
    b.check("|lower - 0.25|", std::abs(bounds.lower - 0.25), 1e-15);
    b.check("|upper - sqrt(0.5)|", std::abs(bounds.upper - std::sqrt(0.5)), 1e-15);

    GramMatrix g = gram_of(AmbientDomain::unit_ball(2), SubregionSpec::dilated_copy(0.5), 1);
    b.check("|Rayleigh quotient - (r/R)^{2n}|", std::abs(g.at(0, 0).real() - 0.0625), 0.0);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = -1.0;
    for (auto [n, r, delta] : {std::tuple<int, double, double>{2, 0.5, 0.5},
                               std::tuple<int, double, double>{3, 0.4, 0.7}}) {
        double cap = std::pow(delta, 0.5 * (n - 1.0));
        int found = 0;
        while (found < 200) {
            Cplx z(delta + r * u(rng), r * u(rng));
            if (std::norm(z - Cplx(delta, 0)) >= r * r) continue;
            ++found;
            worst = std::max(worst, oracles::slice_norm(n, r, delta, z) - cap);
        }
    }
    b.check("max slice norm excess over delta^{(n-1)/2}", worst, 1e-12);
    return b.report;
}

// 10. Bidisc product spectrum and the Hartogs-figure norm.
CaseReport case_bidisc(std::uint64_t) {
    Builder b("bidisc", "product spectrum sup equals rho1^2 on the bidisc");
    const double rho1 = 0.6, rho2 = 0.4;
    double formula_sup = 0.0;
    for (int a1 = 0; a1 <= 40; ++a1)
        for (int a2 = 0; a2 <= 40 - a1; ++a2)
            formula_sup = std::max(formula_sup, std::pow(rho1, 2.0 * a1 + 2.0) *
                                                    (1.0 - std::pow(rho2, 2.0 * a2 + 2.0)));
    b.check("|sup lambda - rho1^2|", std::abs(formula_sup - rho1 * rho1), 1e-12);

    AmbientDomain bidisc = AmbientDomain::polydisc({1.0, 1.0});
    GramMatrix g = gram_of(bidisc, SubregionSpec::product_region({{0.0, rho1}, {rho2, 1.0}}), 41);
    auto spectrum = toeplitz::eigensolve(g);
    b.check("|top Gram eigenvalue - formula sup|", std::abs(spectrum.eigenvalues[0] - formula_sup),
            1e-14);
    b.check("|restriction norm - 0.6|", std::abs(std::sqrt(spectrum.eigenvalues[0]) - 0.6), 1e-12);
    return b.report;
}

// 11. Moebius isospectrality of a disc and its automorphic image.
CaseReport case_moebius(std::uint64_t) {
    Builder b("moebius", "Disc(0, 0.3) vs its a=0.4 automorphic image at N=80");
    geometry::MoebiusMap map(Cplx(0.4, 0), 0.0);
    auto report = toeplitz::isospectrality_check(SubregionSpec::disc(Cplx(0, 0), 0.3), map, 80);
    b.check("top eigenvalue relative deviation", report.max_relative_deviation, 1e-4);
    double lambda0 = oracles::offcenter_disc_spectrum(Cplx(0, 0), 0.3).sequence().generator(0);
    b.check("original vs oracle", std::abs(report.original.eigenvalues[0] - lambda0) / lambda0,
            1e-4);
    b.check("image vs oracle", std::abs(report.image.eigenvalues[0] - lambda0) / lambda0, 1e-4);
    return b.report;
}

// 12. Horodisc noncompactness evidence.
CaseReport case_horodisc(std::uint64_t) {
    Builder b("horodisc", "Horodisc(0, 1/2) eigenvalues spread over [0, max] as N grows");
    AmbientDomain disc = AmbientDomain::unit_disc();
    SubregionSpec horodisc = SubregionSpec::horodisc(0.0, 0.5);
    double prev_top = 0.0;
    std::vector<double> final_eigenvalues;
    for (int order : {32, 64, 128}) {
        auto spectrum = toeplitz::eigensolve(gram_of(disc, horodisc, order));
        b.check_true("N=" + std::to_string(order) + " top nondecreasing",
                     spectrum.eigenvalues.front() >= prev_top - 1e-12);
        prev_top = std::max(prev_top, spectrum.eigenvalues.front());
        if (order == 128) final_eigenvalues = spectrum.eigenvalues;
    }
    double top = final_eigenvalues.front();
    std::vector<int> bin_counts(10, 0);
    for (double lambda : final_eigenvalues) {
        int bin = std::clamp(static_cast<int>(10.0 * lambda / top), 0, 9);
        ++bin_counts[bin];
    }
    int empty_bins = static_cast<int>(std::count(bin_counts.begin(), bin_counts.end(), 0));
    b.check("empty bins in the 10-bin partition of [0, max]", empty_bins, 0.0);
    return b.report;
}

}  // namespace

std::vector<std::string> case_names() {
    return {"dilation",  "offcenter-disc", "horostrip", "strip-containment",
            "lune",      "complement",     "ideal-triangle", "schatten",
            "ball-bounds", "bidisc",       "moebius",   "horodisc"};
}

CaseReport run_case(const std::string& name, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    CaseReport report = [&]() {
        if (name == "dilation") return case_dilation(seed);
        if (name == "offcenter-disc") return case_offcenter(seed);
        if (name == "horostrip") return case_horostrip(seed);
        if (name == "strip-containment") return case_strip_containment(seed);
        if (name == "lune") return case_lune(seed);
        if (name == "complement") return case_complement(seed);
        if (name == "ideal-triangle") return case_ideal_triangle(seed);
        if (name == "schatten") return case_schatten(seed);
        if (name == "ball-bounds") return case_ball_bounds(seed);
        if (name == "bidisc") return case_bidisc(seed);
        if (name == "moebius") return case_moebius(seed);
        if (name == "horodisc") return case_horodisc(seed);
        throw Error(ErrorCode::InvalidArgument, "unknown comparison case '" + name + "'");
    }();
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CaseReport> run_all(std::uint64_t seed) {
    std::vector<CaseReport> reports;
    for (const std::string& name : case_names()) reports.push_back(run_case(name, seed));
    return reports;
}

}  // namespace bergman::verify
