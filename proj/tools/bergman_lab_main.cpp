#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/error.hpp"
#include "bergman/io_json.hpp"
#include "bergman/oracles.hpp"
#include "bergman/schatten.hpp"
#include "bergman/toeplitz.hpp"
#include "bergman/verify.hpp"

namespace {

using bergman::Cplx;
using bergman::Error;
using bergman::geometry::AmbientDomain;
using bergman::geometry::SubregionSpec;
using bergman::io::format_double;
using bergman::io::json;

struct Cli {
    std::string command;
    std::string ambient = "disc";
    std::string region;
    std::vector<int> orders;
    double p = 1.0;
    double rho = 0.0, rho1 = 0.0, rho2 = 0.0;
    std::string output = "json";
    std::string out_path = "-";
    std::uint64_t seed = 20240901;
    std::size_t budget = 0;  // 0 = module default
    int depth = 12;
    std::string oracle_case;
    std::string compare_case = "all";
};

void write_output(const Cli& cli, const std::string& payload) {
    if (cli.out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(cli.out_path, std::ios::binary);
    if (!out) throw Error(bergman::ErrorCode::InvalidArgument, "cannot open " + cli.out_path);
    out << payload;
}

std::vector<int> orders_or_default(const Cli& cli) {
    return cli.orders.empty() ? std::vector<int>{16, 32, 64, 128} : cli.orders;
}

bergman::moments::QuadratureParams quad_params(const Cli& cli) {
    bergman::moments::QuadratureParams q;
    if (cli.budget) q.budget = cli.budget;
    q.depth = cli.depth;
    return q;
}

std::optional<bergman::oracles::Interval> oracle_interval_for(const SubregionSpec& region) {
    using namespace bergman;
    if (region.get_if<geometry::HorodiscSpec>()) return oracles::Interval{0.0, 1.0};
    if (const auto* s = region.get_if<geometry::HorocyclicStripSpec>())
        return oracles::horostrip_interval(s->rho1, s->rho2).interval();
    if (const auto* l = region.get_if<geometry::HypercyclicLuneSpec>())
        return oracles::lune_norm(l->alpha / kPi, l->beta / kPi).interval();
    return std::nullopt;
}

std::string spectra_to_csv(const std::vector<bergman::toeplitz::SpectrumEstimate>& spectra) {
    std::ostringstream out;
    out << "index,eigenvalue,order,gram_error,solver_residual\n";
    for (const auto& s : spectra)
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
            out << i << ',' << format_double(s.eigenvalues[i]) << ',' << s.order << ','
                << format_double(s.gram_error) << ',' << format_double(s.solver_residual) << '\n';
    return out.str();
}

std::string spectrum_svg(const bergman::toeplitz::SpectrumEstimate& spectrum,
                         const std::optional<bergman::oracles::Interval>& oracle) {
    const double width = 640, height = 400, margin = 48;
    double y_max = std::max(1.0, spectrum.eigenvalues.empty() ? 1.0 : spectrum.eigenvalues.front());
    double n = std::max<std::size_t>(1, spectrum.eigenvalues.size() - 1);
    auto x_of = [&](double i) { return margin + (width - 2 * margin) * i / n; };
    auto y_of = [&](double v) { return height - margin - (height - 2 * margin) * v / y_max; };
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    svg << "<line x1='" << margin << "' y1='" << height - margin << "' x2='" << width - margin
        << "' y2='" << height - margin << "' stroke='black'/>\n";
    svg << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin << "' y2='"
        << height - margin << "' stroke='black'/>\n";
    svg << "<text x='" << width / 2 << "' y='" << height - 10
        << "' font-size='13' text-anchor='middle'>eigenvalue index</text>\n";
    svg << "<text x='14' y='" << height / 2
        << "' font-size='13' text-anchor='middle' transform='rotate(-90 14 " << height / 2
        << ")'>eigenvalue</text>\n";
    if (oracle) {
        for (double rule : {oracle->lo, oracle->hi}) {
            svg << "<line x1='" << margin << "' y1='" << y_of(rule) << "' x2='" << width - margin
                << "' y2='" << y_of(rule)
                << "' stroke='crimson' stroke-dasharray='6 4' stroke-width='1'/>\n";
        }
    }
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
        svg << "<circle cx='" << x_of(static_cast<double>(i)) << "' cy='"
            << y_of(spectrum.eigenvalues[i]) << "' r='2.5' fill='steelblue'/>\n";
    svg << "</svg>\n";
    return svg.str();
}

int run_spectrum(const Cli& cli) {
    AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
    SubregionSpec region = bergman::io::region_from_string(cli.region);
    std::vector<bergman::toeplitz::SpectrumEstimate> spectra;
    for (int order : orders_or_default(cli)) {
        bergman::moments::MomentRequest request{ambient, region, order,
                                                bergman::moments::Method::Auto, quad_params(cli)};
        spectra.push_back(bergman::toeplitz::eigensolve(bergman::moments::gram(request)));
    }
    if (cli.output == "csv") {
        write_output(cli, spectra_to_csv(spectra));
    } else if (cli.output == "svg") {
        write_output(cli, spectrum_svg(spectra.back(), oracle_interval_for(region)));
    } else {
        json j = json::array();
        for (const auto& s : spectra) j.push_back(bergman::io::spectrum_to_json(s));
        write_output(cli, j.dump(2) + "\n");
    }
    return 0;
}

int run_norm(const Cli& cli) {
    AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
    SubregionSpec region = bergman::io::region_from_string(cli.region);
    auto estimate =
        bergman::toeplitz::norm_estimate(ambient, region, orders_or_default(cli), quad_params(cli));
    json history = json::array();
    for (const auto& h : estimate.history)
        history.push_back({{"order", h.order}, {"top", h.top}, {"bottom", h.bottom}});
    json j{{"toeplitz_norm_lower", estimate.lower},
           {"restriction_norm_lower", estimate.restriction_norm_lower()},
           {"history", history}};
    if (cli.output == "csv") {
        std::ostringstream out;
        out << "order,top,bottom\n";
        for (const auto& h : estimate.history)
            out << h.order << ',' << format_double(h.top) << ',' << format_double(h.bottom) << '\n';
        write_output(cli, out.str());
    } else {
        write_output(cli, j.dump(2) + "\n");
    }
    return 0;
}

int run_trace(const Cli& cli) {
    AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
    SubregionSpec region = bergman::io::region_from_string(cli.region);
    auto trace = bergman::schatten::trace_by_formula(region, ambient,
                                                     cli.budget ? cli.budget : 3000000);
    json j{{"value", trace.value}, {"error_estimate", trace.error_estimate}, {"cells", trace.cells}};
    if (cli.output == "csv") {
        write_output(cli, "value,error_estimate\n" + format_double(trace.value) + "," +
                              format_double(trace.error_estimate) + "\n");
    } else {
        write_output(cli, j.dump(2) + "\n");
    }
    return 0;
}

int run_schatten(const Cli& cli) {
    AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
    SubregionSpec region = bergman::io::region_from_string(cli.region);
    int order = orders_or_default(cli).back();
    bergman::moments::MomentRequest request{ambient, region, order,
                                            bergman::moments::Method::Auto, quad_params(cli)};
    auto g = bergman::moments::gram(request);
    auto report = bergman::schatten::schatten_norm(g, cli.p);
    json j{{"p", report.p},
           {"value_matrix", report.value_matrix},
           {"order", report.order},
           {"tail_bound", report.tail_bound},
           {"power_path_deviation", report.power_path_deviation},
           {"restriction_norm", bergman::schatten::restriction_schatten_norm(g, cli.p)}};
    if (cli.output == "csv") {
        write_output(cli, "p,value,order\n" + format_double(report.p) + "," +
                              format_double(report.value_matrix) + "," +
                              std::to_string(report.order) + "\n");
    } else {
        write_output(cli, j.dump(2) + "\n");
    }
    return 0;
}

int run_oracle(const Cli& cli) {
    using namespace bergman::oracles;
    std::optional<OracleResult> result;
    if (cli.oracle_case == "horostrip") {
        result = horostrip_interval(cli.rho1, cli.rho2);
    } else if (cli.oracle_case == "dilation") {
        AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
        result = dilation_spectrum(ambient.dimension(), cli.rho);
    } else if (cli.oracle_case == "offcenter") {
        SubregionSpec region = bergman::io::region_from_string(cli.region);
        const auto* d = region.get_if<bergman::geometry::DiscSpec>();
        if (!d)
            throw Error(bergman::ErrorCode::InvalidArgument,
                        "oracle offcenter expects --region of kind Disc");
        result = offcenter_disc_spectrum(d->center, d->radius);
    } else if (cli.oracle_case == "lune") {
        SubregionSpec region = bergman::io::region_from_string(cli.region);
        const auto* l = region.get_if<bergman::geometry::HypercyclicLuneSpec>();
        if (!l)
            throw Error(bergman::ErrorCode::InvalidArgument,
                        "oracle lune expects --region of kind HypercyclicLune");
        result = lune_norm(l->alpha / bergman::kPi, l->beta / bergman::kPi);
    } else if (cli.oracle_case.rfind("ball:", 0) == 0) {
        std::istringstream in(cli.oracle_case.substr(5));
        int n;
        double big_r, r, delta;
        char c;
        if (!(in >> n >> c >> big_r >> c >> r >> c >> delta))
            throw Error(bergman::ErrorCode::ParseError, "expected ball:<n>,<R>,<r>,<delta>");
        result = ball_bounds(n, big_r, r, delta);
    } else {
        throw Error(bergman::ErrorCode::InvalidArgument,
                    "unknown oracle case '" + cli.oracle_case +
                        "' (horostrip, dilation, offcenter, lune, ball:<n>,<R>,<r>,<delta>)");
    }
    json j = bergman::io::oracle_to_json(*result);
    if (cli.output == "csv") {
        std::ostringstream out;
        if (j["kind"] == "Interval") {
            out << "lo,hi\n"
                << format_double(j["lo"].get<double>()) << ','
                << format_double(j["hi"].get<double>()) << '\n';
        } else if (j["kind"] == "NormBounds") {
            out << "lower,upper\n"
                << format_double(j["lower"].get<double>()) << ','
                << format_double(j["upper"].get<double>()) << '\n';
        } else {
            out << "k,lambda\n";
            int k = 0;
            for (const auto& v : j["values"]) out << k++ << ',' << format_double(v.get<double>()) << '\n';
        }
        write_output(cli, out.str());
    } else {
        write_output(cli, j.dump(2) + "\n");
    }
    return 0;
}

int run_compare(const Cli& cli) {
    std::vector<bergman::verify::CaseReport> reports;
    if (cli.compare_case == "all") {
        reports = bergman::verify::run_all(cli.seed);
    } else {
        reports.push_back(bergman::verify::run_case(cli.compare_case, cli.seed));
    }
    bool all_passed = true;
    json j = json::array();
    for (const auto& report : reports) {
        all_passed = all_passed && report.passed;
        json checks = json::array();
        for (const auto& check : report.checks)
            checks.push_back({{"name", check.name},
                              {"passed", check.passed},
                              {"observed", check.observed},
                              {"bound", check.bound}});
        j.push_back({{"case", report.name},
                     {"summary", report.summary},
                     {"passed", report.passed},
                     {"seconds", report.seconds},
                     {"checks", checks}});
    }
    if (cli.output == "csv") {
        std::ostringstream out;
        out << "case,passed,seconds\n";
        for (const auto& report : reports)
            out << report.name << ',' << (report.passed ? 1 : 0) << ','
                << format_double(report.seconds) << '\n';
        write_output(cli, out.str());
    } else {
        write_output(cli, j.dump(2) + "\n");
    }
    return all_passed ? 0 : 1;
}

int run_sweep(const Cli& cli) {
    AmbientDomain ambient = bergman::io::ambient_from_string(cli.ambient);
    SubregionSpec region = bergman::io::region_from_string(cli.region);
    auto estimate =
        bergman::toeplitz::norm_estimate(ambient, region, orders_or_default(cli), quad_params(cli));
    std::ostringstream csv;
    csv << "order,top,bottom,top_difference\n";
    json rows = json::array();
    double prev = 0.0;
    for (std::size_t i = 0; i < estimate.history.size(); ++i) {
        const auto& h = estimate.history[i];
        double diff = i == 0 ? 0.0 : h.top - prev;
        prev = h.top;
        csv << h.order << ',' << format_double(h.top) << ',' << format_double(h.bottom) << ','
            << format_double(diff) << '\n';
        rows.push_back(
            {{"order", h.order}, {"top", h.top}, {"bottom", h.bottom}, {"top_difference", diff}});
    }
    if (cli.output == "csv")
        write_output(cli, csv.str());
    else
        write_output(cli, rows.dump(2) + "\n");
    return 0;
}

void apply_config_file(CLI::App& app, Cli& cli, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(bergman::ErrorCode::ParseError, "cannot read config file " + path);
    json config = json::parse(in, nullptr, true, true);
    auto assign_if_unset = [&](const char* flag, auto& target) {
        using T = std::decay_t<decltype(target)>;
        if (config.contains(flag) && app.count(std::string("--") + flag) == 0)
            target = config[flag].get<T>();
    };
    assign_if_unset("ambient", cli.ambient);
    assign_if_unset("region", cli.region);
    assign_if_unset("orders", cli.orders);
    assign_if_unset("p", cli.p);
    assign_if_unset("rho", cli.rho);
    assign_if_unset("rho1", cli.rho1);
    assign_if_unset("rho2", cli.rho2);
    assign_if_unset("output", cli.output);
    assign_if_unset("out", cli.out_path);
    assign_if_unset("seed", cli.seed);
    assign_if_unset("budget", cli.budget);
    assign_if_unset("depth", cli.depth);
    assign_if_unset("case", cli.oracle_case);
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    std::string config_path;

    CLI::App app{"Spectra, norms, traces, and Schatten norms of Bergman-space "
                 "restriction operators on model domains"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--ambient", cli.ambient, "disc | ball:<n> | polydisc:<r1>,<r2>,... | JSON");
    app.add_option("--region", cli.region,
                   "region JSON, or ideal-triangle | horodisc:<rho> | strip:<rho1>,<rho2> | "
                   "lune:<a>,<b> | dilated:<rho>");
    app.add_option("--orders", cli.orders, "truncation orders (default 16 32 64 128)")
        ->delimiter(',');
    app.add_option("--p", cli.p, "Schatten exponent");
    app.add_option("--rho", cli.rho, "dilation / horodisc radius");
    app.add_option("--rho1", cli.rho1, "inner horocycle radius");
    app.add_option("--rho2", cli.rho2, "outer horocycle radius");
    app.add_option("--output", cli.output, "csv | json | svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--out", cli.out_path, "output path ('-' = stdout)");
    app.add_option("--seed", cli.seed, "seed for randomized comparison sampling");
    app.add_option("--budget", cli.budget, "quadrature cell budget");
    app.add_option("--depth", cli.depth, "quadrature refinement depth");
    app.add_option("--config", config_path, "JSON config file; explicit flags override");

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "compression eigenvalues");
    CLI::App* cmd_norm = app.add_subcommand("norm", "lower bounds for ||T_U|| and ||R_U||");
    CLI::App* cmd_trace = app.add_subcommand("trace", "trace of T_U via the kernel integral");
    CLI::App* cmd_schatten = app.add_subcommand("schatten", "Schatten p-norm of the compression");
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "closed-form spectral data");
    cmd_oracle->add_option("--case", cli.oracle_case,
                           "horostrip | dilation | offcenter | lune | ball:<n>,<R>,<r>,<delta>");
    CLI::App* cmd_compare = app.add_subcommand("compare", "numeric vs oracle comparison suite");
    cmd_compare->add_option("--case", cli.compare_case, "comparison case name or 'all'");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "truncation sweep with successive differences");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) apply_config_file(app, cli, config_path);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_spectrum->parsed()) return run_spectrum(cli);
        if (cmd_norm->parsed()) return run_norm(cli);
        if (cmd_trace->parsed()) return run_trace(cli);
        if (cmd_schatten->parsed()) return run_schatten(cli);
        if (cmd_oracle->parsed()) return run_oracle(cli);
        if (cmd_compare->parsed()) return run_compare(cli);
        if (cmd_sweep->parsed()) return run_sweep(cli);
    } catch (const Error& e) {
        json err{{"code", bergman::error_code_name(e.code())},
                 {"message", e.what()},
                 {"detail", e.detail()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"code", "Unexpected"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
