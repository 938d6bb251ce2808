#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/error.hpp"
#include "bergman/io_json.hpp"
#include "bergman/oracles.hpp"
#include "bergman/schatten.hpp"
#include "bergman/toeplitz.hpp"
#include "bergman/verify.hpp"

namespace py = pybind11;

using namespace bergman;
using geometry::AmbientDomain;
using geometry::SubregionSpec;

namespace {

AmbientDomain parse_ambient(const std::string& text) { return io::ambient_from_string(text); }

moments::GramMatrix gram_impl(const std::string& ambient, const SubregionSpec& region, int order,
                              std::size_t budget, int depth) {
    moments::MomentRequest request{parse_ambient(ambient), region, order,
                                   moments::Method::Auto,
                                   moments::QuadratureParams{budget, depth}};
    return moments::gram(request);
}

py::dict gram_dict(const moments::GramMatrix& g) {
    py::dict out;
    std::size_t n = g.size();
    py::list rows;
    for (std::size_t j = 0; j < n; ++j) {
        py::list row;
        for (std::size_t k = 0; k < n; ++k) row.append(g.at(j, k));
        rows.append(row);
    }
    out["matrix"] = rows;
    out["order"] = g.order;
    out["index_list"] = g.index_list;
    out["error_estimate"] = g.error_estimate;
    out["truncated_quality"] = g.truncated_quality;
    return out;
}

py::dict spectrum_dict(const toeplitz::SpectrumEstimate& s) {
    py::dict out;
    out["eigenvalues"] = s.eigenvalues;
    out["order"] = s.order;
    out["gram_error"] = s.gram_error;
    out["solver_residual"] = s.solver_residual;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectra, norms, traces, and Schatten norms of Bergman-space "
              "restriction operators on model domains";

    py::register_exception<Error>(m, "BergmanError");

    py::class_<SubregionSpec>(m, "Region")
        .def_static("from_json", [](const std::string& text) {
            return io::region_from_string(text);
        })
        .def_static("indicator",
                    [](const std::string& label, std::function<bool(Cplx)> predicate) {
                        return SubregionSpec::indicator(
                            label, [predicate](const Point& z) { return predicate(z[0]); });
                    })
        .def_property_readonly("kind", &SubregionSpec::kind_name)
        .def("complement", [](const SubregionSpec& s) { return SubregionSpec::complement(s); })
        .def("to_json", [](const SubregionSpec& s) { return io::region_to_json(s).dump(); })
        .def("__repr__", [](const SubregionSpec& s) { return "<Region " + s.kind_name() + ">"; });

    m.def("contains",
          [](const SubregionSpec& region, const std::string& ambient, const std::vector<Cplx>& z) {
              return geometry::contains(region, parse_ambient(ambient), z);
          },
          py::arg("region"), py::arg("ambient"), py::arg("point"));

    m.def("cayley", [](Cplx z) { return geometry::cayley(z); });
    m.def("moebius_apply", [](Cplx a, double phase, Cplx z) {
        return geometry::MoebiusMap(a, phase).apply(z);
    });

    m.def("monomial_norm_sq", [](const std::string& ambient, const MultiIndex& alpha) {
        return kernels::monomial_norm_sq(parse_ambient(ambient), alpha);
    });
    m.def("bergman_kernel_diag", [](const std::string& ambient, const std::vector<Cplx>& z) {
        return kernels::bergman_kernel_diag(parse_ambient(ambient), z);
    });

    m.def("gram",
          [](const std::string& ambient, const SubregionSpec& region, int order,
             std::size_t budget, int depth) {
              return gram_dict(gram_impl(ambient, region, order, budget, depth));
          },
          py::arg("ambient"), py::arg("region"), py::arg("order"), py::arg("budget") = 200000,
          py::arg("depth") = 12);

    m.def("spectrum",
          [](const std::string& ambient, const SubregionSpec& region, int order,
             std::size_t budget, int depth) {
              return spectrum_dict(
                  toeplitz::eigensolve(gram_impl(ambient, region, order, budget, depth)));
          },
          py::arg("ambient"), py::arg("region"), py::arg("order"), py::arg("budget") = 200000,
          py::arg("depth") = 12);

    m.def("norm_estimate",
          [](const std::string& ambient, const SubregionSpec& region, const std::vector<int>& orders) {
              auto est = toeplitz::norm_estimate(parse_ambient(ambient), region, orders);
              py::dict out;
              out["toeplitz_norm_lower"] = est.lower;
              out["restriction_norm_lower"] = est.restriction_norm_lower();
              py::list history;
              for (const auto& h : est.history)
                  history.append(py::make_tuple(h.order, h.top, h.bottom));
              out["history"] = history;
              return out;
          },
          py::arg("ambient"), py::arg("region"), py::arg("orders"));

    m.def("isospectrality_check",
          [](const SubregionSpec& region, Cplx a, double phase, int order) {
              auto report =
                  toeplitz::isospectrality_check(region, geometry::MoebiusMap(a, phase), order);
              py::dict out;
              out["max_relative_deviation"] = report.max_relative_deviation;
              out["original"] = spectrum_dict(report.original);
              out["image"] = spectrum_dict(report.image);
              return out;
          },
          py::arg("region"), py::arg("a"), py::arg("phase"), py::arg("order"));

    m.def("trace_by_formula",
          [](const std::string& ambient, const SubregionSpec& region, std::size_t budget) {
              auto trace = schatten::trace_by_formula(region, parse_ambient(ambient), budget);
              return py::make_tuple(trace.value, trace.error_estimate);
          },
          py::arg("ambient"), py::arg("region"), py::arg("budget") = 3000000);

    m.def("schatten_norm",
          [](const std::string& ambient, const SubregionSpec& region, int order, double p) {
              auto g = gram_impl(ambient, region, order, 200000, 12);
              auto report = schatten::schatten_norm(g, p);
              py::dict out;
              out["p"] = report.p;
              out["value"] = report.value_matrix;
              out["order"] = report.order;
              out["power_path_deviation"] = report.power_path_deviation;
              out["restriction_norm"] = schatten::restriction_schatten_norm(g, p);
              return out;
          },
          py::arg("ambient"), py::arg("region"), py::arg("order"), py::arg("p") = 1.0);

    // Closed-form oracles.
    m.def("dilation_spectrum", [](int n, double rho, int count) {
        auto seq = oracles::dilation_spectrum(n, rho).sequence();
        std::vector<double> values;
        for (int k = 0; k < count; ++k) values.push_back(seq.generator(k));
        return py::make_tuple(values, seq.restriction_norm);
    }, py::arg("n"), py::arg("rho"), py::arg("count") = 16);
    m.def("offcenter_disc_spectrum", [](Cplx z0, double r, int count) {
        auto seq = oracles::offcenter_disc_spectrum(z0, r).sequence();
        std::vector<double> values;
        for (int k = 0; k < count; ++k) values.push_back(seq.generator(k));
        return values;
    }, py::arg("z0"), py::arg("r"), py::arg("count") = 16);
    m.def("gamma_strip", &oracles::gamma_strip);
    m.def("horostrip_interval", [](double rho1, double rho2) {
        auto interval = oracles::horostrip_interval(rho1, rho2).interval();
        return py::make_tuple(interval.lo, interval.hi);
    });
    m.def("gamma_wedge", &oracles::gamma_wedge);
    m.def("lune_norm", [](double a, double b) {
        auto interval = oracles::lune_norm(a, b).interval();
        return py::make_tuple(interval.lo, interval.hi);
    });
    m.def("ball_bounds", [](int n, double R, double r, double delta) {
        auto bounds = oracles::ball_bounds(n, R, r, delta).bounds();
        return py::make_tuple(bounds.lower, bounds.upper);
    });
    m.def("slice_norm", &oracles::slice_norm);

    m.def("compare_case", [](const std::string& name, std::uint64_t seed) {
        auto report = verify::run_case(name, seed);
        py::dict out;
        out["case"] = report.name;
        out["passed"] = report.passed;
        py::list checks;
        for (const auto& check : report.checks)
            checks.append(py::make_tuple(check.name, check.passed, check.observed, check.bound));
        out["checks"] = checks;
        return out;
    }, py::arg("name"), py::arg("seed") = 20240901);
}
