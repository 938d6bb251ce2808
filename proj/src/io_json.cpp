#include "bergman/io_json.hpp"

#include <cstdio>

#include "bergman/error.hpp"

namespace bergman::io {

using geometry::AmbientDomain;
using geometry::SubregionSpec;

namespace {

json complex_to_json(Cplx z) { return json::array({z.real(), z.imag()}); }

Cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorCode::ParseError, "complex numbers serialize as [re, im]");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

std::vector<double> split_numbers(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            out.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "expected a number, got '" + token + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace

json region_to_json(const SubregionSpec& region) {
    json params = json::object();
    if (const auto* d = region.get_if<geometry::DiscSpec>()) {
        params["center"] = complex_to_json(d->center);
        params["radius"] = d->radius;
    } else if (const auto* h = region.get_if<geometry::HorodiscSpec>()) {
        params["tangencyAngle"] = h->tangency_angle;
        params["rho"] = h->rho;
    } else if (const auto* s = region.get_if<geometry::HorocyclicStripSpec>()) {
        params["tangencyAngle"] = s->tangency_angle;
        params["rho1"] = s->rho1;
        params["rho2"] = s->rho2;
    } else if (const auto* l = region.get_if<geometry::HypercyclicLuneSpec>()) {
        params["endpointA"] = complex_to_json(l->endpoint_a);
        params["endpointB"] = complex_to_json(l->endpoint_b);
        params["alpha"] = l->alpha;
        params["beta"] = l->beta;
    } else if (const auto* p = region.get_if<geometry::IdealPolygonSpec>()) {
        json vertices = json::array();
        for (Cplx v : p->vertices) vertices.push_back(complex_to_json(v));
        params["vertices"] = vertices;
    } else if (const auto* d = region.get_if<geometry::DilatedCopySpec>()) {
        params["rho"] = d->rho;
    } else if (const auto* p = region.get_if<geometry::ProductRegionSpec>()) {
        json factors = json::array();
        for (auto [lo, hi] : p->factors) factors.push_back(json::array({lo, hi}));
        params["factors"] = factors;
    } else if (const auto* c = region.get_if<geometry::ComplementSpec>()) {
        params["inner"] = region_to_json(*c->inner);
    } else if (const auto* i = region.get_if<geometry::IndicatorSpec>()) {
        params["label"] = i->label;
    }
    return json{{"kind", region.kind_name()}, {"params", params}};
}

SubregionSpec region_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error(ErrorCode::ParseError, "region JSON needs a 'kind' field");
    std::string kind = j["kind"].get<std::string>();
    json params = j.value("params", json::object());
    try {
        if (kind == "Disc")
            return SubregionSpec::disc(complex_from_json(params.at("center")),
                                       params.at("radius").get<double>());
        if (kind == "Horodisc")
            return SubregionSpec::horodisc(params.value("tangencyAngle", 0.0),
                                           params.at("rho").get<double>());
        if (kind == "HorocyclicStrip")
            return SubregionSpec::horocyclic_strip(params.value("tangencyAngle", 0.0),
                                                   params.at("rho1").get<double>(),
                                                   params.at("rho2").get<double>());
        if (kind == "HypercyclicLune")
            return SubregionSpec::hypercyclic_lune(
                complex_from_json(params.at("endpointA")), complex_from_json(params.at("endpointB")),
                params.at("alpha").get<double>(), params.at("beta").get<double>());
        if (kind == "IdealPolygon") {
            std::vector<Cplx> vertices;
            for (const json& v : params.at("vertices")) vertices.push_back(complex_from_json(v));
            return SubregionSpec::ideal_polygon(std::move(vertices));
        }
        if (kind == "DilatedCopy") return SubregionSpec::dilated_copy(params.at("rho").get<double>());
        if (kind == "ProductRegion") {
            std::vector<std::pair<double, double>> factors;
            for (const json& f : params.at("factors"))
                factors.emplace_back(f.at(0).get<double>(), f.at(1).get<double>());
            return SubregionSpec::product_region(std::move(factors));
        }
        if (kind == "Complement")
            return SubregionSpec::complement(region_from_json(params.at("inner")));
        if (kind == "Indicator")
            return SubregionSpec::indicator(params.value("label", ""), nullptr);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed region JSON: ") + e.what());
    }
    throw Error(ErrorCode::ParseError, "unknown region kind '" + kind + "'");
}

json ambient_to_json(const AmbientDomain& ambient) {
    switch (ambient.kind()) {
        case geometry::AmbientKind::UnitDisc: return json{{"kind", "UnitDisc"}};
        case geometry::AmbientKind::UnitBall:
            return json{{"kind", "UnitBall"}, {"params", {{"n", ambient.dimension()}}}};
        case geometry::AmbientKind::Polydisc:
            return json{{"kind", "Polydisc"}, {"params", {{"radii", ambient.radii()}}}};
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled ambient kind");
}

AmbientDomain ambient_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "UnitDisc") return AmbientDomain::unit_disc();
    if (kind == "UnitBall") return AmbientDomain::unit_ball(j.at("params").at("n").get<int>());
    if (kind == "Polydisc")
        return AmbientDomain::polydisc(j.at("params").at("radii").get<std::vector<double>>());
    throw Error(ErrorCode::ParseError, "unknown ambient kind '" + kind + "'");
}

AmbientDomain ambient_from_string(const std::string& text) {
    if (!text.empty() && text.front() == '{') return ambient_from_json(json::parse(text));
    if (text == "disc" || text == "unit-disc") return AmbientDomain::unit_disc();
    if (text.rfind("ball:", 0) == 0) return AmbientDomain::unit_ball(std::stoi(text.substr(5)));
    if (text.rfind("polydisc:", 0) == 0)
        return AmbientDomain::polydisc(split_numbers(text.substr(9)));
    throw Error(ErrorCode::ParseError, "unknown ambient '" + text + "'");
}

SubregionSpec region_from_string(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("region JSON parse error: ") + e.what());
        }
        return region_from_json(j);
    }
    if (text == "ideal-triangle") {
        std::vector<Cplx> roots;
        for (int k = 0; k < 3; ++k) roots.push_back(std::polar(1.0, 2.0 * kPi * k / 3.0));
        return SubregionSpec::ideal_polygon(std::move(roots));
    }
    if (text.rfind("horodisc:", 0) == 0)
        return SubregionSpec::horodisc(0.0, std::stod(text.substr(9)));
    if (text.rfind("strip:", 0) == 0) {
        auto v = split_numbers(text.substr(6));
        if (v.size() != 2) throw Error(ErrorCode::ParseError, "strip:<rho1>,<rho2>");
        return SubregionSpec::horocyclic_strip(0.0, v[0], v[1]);
    }
    if (text.rfind("lune:", 0) == 0) {
        auto v = split_numbers(text.substr(5));
        if (v.size() != 2) throw Error(ErrorCode::ParseError, "lune:<a>,<b> with 0<=a<b<=1");
        return SubregionSpec::hypercyclic_lune(Cplx(-1, 0), Cplx(1, 0), v[0] * kPi, v[1] * kPi);
    }
    if (text.rfind("dilated:", 0) == 0)
        return SubregionSpec::dilated_copy(std::stod(text.substr(8)));
    throw Error(ErrorCode::ParseError, "unknown region '" + text + "'");
}

json gram_to_json(const moments::GramMatrix& g) {
    json entries = json::array();
    for (const Cplx& e : g.entries) entries.push_back(complex_to_json(e));
    return json{{"order", g.order},
                {"index_list", g.index_list},
                {"entries", entries},
                {"error_estimate", g.error_estimate},
                {"truncated_quality", g.truncated_quality}};
}

json spectrum_to_json(const toeplitz::SpectrumEstimate& s) {
    json history = json::array();
    for (const auto& h : s.history)
        history.push_back(json{{"order", h.order}, {"top", h.top}, {"bottom", h.bottom}});
    return json{{"order", s.order},
                {"eigenvalues", s.eigenvalues},
                {"gram_error", s.gram_error},
                {"solver_residual", s.solver_residual},
                {"history", history}};
}

json oracle_to_json(const oracles::OracleResult& o, int sequence_terms) {
    json j{{"provenance", o.provenance}};
    if (const auto* seq = std::get_if<oracles::EigenvalueSequence>(&o.kind)) {
        j["kind"] = "EigenvalueSequence";
        json values = json::array();
        for (int k = 0; k < sequence_terms; ++k) values.push_back(seq->generator(k));
        j["values"] = values;
        j["restriction_norm"] = seq->restriction_norm;
    } else if (const auto* interval = std::get_if<oracles::Interval>(&o.kind)) {
        j["kind"] = "Interval";
        j["lo"] = interval->lo;
        j["hi"] = interval->hi;
    } else if (const auto* bounds = std::get_if<oracles::NormBounds>(&o.kind)) {
        j["kind"] = "NormBounds";
        j["lower"] = bounds->lower;
        j["upper"] = bounds->upper;
    }
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace bergman::io
