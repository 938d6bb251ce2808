#include "bergman/geometry.hpp"

#include <cmath>
#include <sstream>

#include "bergman/error.hpp"

namespace bergman::geometry {

namespace {

bool cmp(double value, double bound, double margin, bool closed) {
    return closed ? value <= bound + margin : value < bound + margin;
}

// Outside-constraint counterpart of cmp: value > bound - margin.
bool cmp_out(double value, double bound, double margin, bool closed) {
    return closed ? value >= bound - margin : value > bound - margin;
}

double norm2(const Point& z) {
    double s = 0.0;
    for (const Cplx& c : z) s += std::norm(c);
    return s;
}

void require_dimension(const AmbientDomain& ambient, const Point& z) {
    if (static_cast<int>(z.size()) != ambient.dimension())
        throw Error(ErrorCode::DimensionMismatch,
                    "point dimension " + std::to_string(z.size()) + " does not match ambient " +
                        ambient.describe());
}

void require_disc_ambient(const AmbientDomain& ambient, const char* what) {
    if (!ambient.is_disc_like())
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + " regions live in the unit disc, got " + ambient.describe());
}

Cplx normalize_unit(Cplx v, const char* what) {
    double m = std::abs(v);
    if (std::abs(m - 1.0) > 1e-9)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie on the unit circle");
    return v / m;
}

}  // namespace

// ---------------------------------------------------------------------------
// AmbientDomain
// ---------------------------------------------------------------------------

AmbientDomain AmbientDomain::unit_disc() { return AmbientDomain(AmbientKind::UnitDisc, 1, {1.0}); }

AmbientDomain AmbientDomain::unit_ball(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "ball dimension must be >= 1");
    return AmbientDomain(AmbientKind::UnitBall, n, std::vector<double>(n, 1.0));
}

AmbientDomain AmbientDomain::polydisc(std::vector<double> radii) {
    if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "polydisc needs at least one radius");
    for (double r : radii)
        if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "polydisc radii must be positive");
    int n = static_cast<int>(radii.size());
    return AmbientDomain(AmbientKind::Polydisc, n, std::move(radii));
}

bool AmbientDomain::contains(const Point& z, double margin, bool closed) const {
    require_dimension(*this, z);
    switch (kind_) {
        case AmbientKind::UnitDisc:
        case AmbientKind::UnitBall:
            return cmp(std::sqrt(norm2(z)), 1.0, margin, closed);
        case AmbientKind::Polydisc:
            for (std::size_t i = 0; i < z.size(); ++i)
                if (!cmp(std::abs(z[i]), radii_[i], margin, closed)) return false;
            return true;
    }
    return false;
}

std::string AmbientDomain::describe() const {
    std::ostringstream o;
    switch (kind_) {
        case AmbientKind::UnitDisc: o << "UnitDisc"; break;
        case AmbientKind::UnitBall: o << "UnitBall(" << dimension_ << ")"; break;
        case AmbientKind::Polydisc:
            o << "Polydisc(";
            for (std::size_t i = 0; i < radii_.size(); ++i) o << (i ? "," : "") << radii_[i];
            o << ")";
            break;
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// MoebiusMap, Cayley, side circles
// ---------------------------------------------------------------------------

MoebiusMap::MoebiusMap(Cplx a, double phase) : a_(a), phase_(phase) {
    if (!(std::abs(a) < 1.0))
        throw Error(ErrorCode::InvalidArgument, "Moebius parameter must satisfy |a| < 1");
}

Cplx MoebiusMap::apply(Cplx z) const {
    return std::polar(1.0, phase_) * (z - a_) / (Cplx(1, 0) - std::conj(a_) * z);
}

Cplx MoebiusMap::apply_inverse(Cplx w) const {
    Cplx u = std::polar(1.0, -phase_) * w;
    return (u + a_) / (Cplx(1, 0) + std::conj(a_) * u);
}

Cplx MoebiusMap::derivative(Cplx z) const {
    Cplx d = Cplx(1, 0) - std::conj(a_) * z;
    return std::polar(1.0, phase_) * (1.0 - std::norm(a_)) / (d * d);
}

Cplx cayley(Cplx z) {
    if (!(std::abs(z) < 1.0))
        throw Error(ErrorCode::DomainError, "cayley transform requires |z| < 1");
    return Cplx(0, 1) * (Cplx(1, 0) + z) / (Cplx(1, 0) - z);
}

Cplx cayley_inverse(Cplx w) {
    if (!(w.imag() > 0.0))
        throw Error(ErrorCode::DomainError, "inverse cayley transform requires Im w > 0");
    return (w - Cplx(0, 1)) / (w + Cplx(0, 1));
}

std::optional<SideCircle> geodesic_side_circle(Cplx a, Cplx b) {
    a = normalize_unit(a, "geodesic endpoint");
    b = normalize_unit(b, "geodesic endpoint");
    if (std::abs(a - b) < 1e-12)
        throw Error(ErrorCode::InvalidArgument, "geodesic endpoints must be distinct");
    double denom = 1.0 + (a * std::conj(b)).real();
    if (std::abs(denom) < 1e-14) return std::nullopt;  // diameter
    Cplx center = (a + b) / denom;
    double r2 = std::norm(center) - 1.0;
    return SideCircle{center, std::sqrt(r2)};
}

DiscSpec horodisc_as_disc(const HorodiscSpec& h) {
    return DiscSpec{std::polar(1.0 - h.rho, h.tangency_angle), h.rho};
}

DiscSpec map_disc(const MoebiusMap& map, const DiscSpec& disc) {
    Cplx p1 = map.apply(disc.center + disc.radius);
    Cplx p2 = map.apply(disc.center - disc.radius);
    Cplx p3 = map.apply(disc.center + Cplx(0, 1) * disc.radius);
    Cplx num = std::norm(p1) * (p2 - p3) + std::norm(p2) * (p3 - p1) + std::norm(p3) * (p1 - p2);
    Cplx den = std::conj(p1) * (p2 - p3) + std::conj(p2) * (p3 - p1) + std::conj(p3) * (p1 - p2);
    if (std::abs(den) == 0.0)
        throw Error(ErrorCode::DomainError, "mapped disc degenerated to a line");
    Cplx center = num / den;
    return DiscSpec{center, std::abs(p1 - center)};
}

// ---------------------------------------------------------------------------
// SubregionSpec construction
// ---------------------------------------------------------------------------

SubregionSpec SubregionSpec::disc(Cplx center, double radius) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "disc radius must be positive");
    return SubregionSpec(DiscSpec{center, radius});
}

SubregionSpec SubregionSpec::horodisc(double tangency_angle, double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::InvalidArgument, "horodisc radius must lie in (0,1)");
    return SubregionSpec(HorodiscSpec{tangency_angle, rho});
}

SubregionSpec SubregionSpec::horocyclic_strip(double tangency_angle, double rho1, double rho2) {
    if (!(0.0 < rho1 && rho1 < rho2 && rho2 < 1.0))
        throw Error(ErrorCode::InvalidArgument, "horocyclic strip requires 0 < rho1 < rho2 < 1");
    return SubregionSpec(HorocyclicStripSpec{tangency_angle, rho1, rho2});
}

SubregionSpec SubregionSpec::hypercyclic_lune(Cplx endpoint_a, Cplx endpoint_b, double alpha,
                                              double beta) {
    Cplx a = normalize_unit(endpoint_a, "lune endpoint");
    Cplx b = normalize_unit(endpoint_b, "lune endpoint");
    if (std::abs(a - b) < 1e-12)
        throw Error(ErrorCode::InvalidArgument, "lune endpoints must be distinct");
    if (!(0.0 <= alpha && alpha < beta && beta <= kPi))
        throw Error(ErrorCode::InvalidArgument, "lune angles require 0 <= alpha < beta <= pi");
    // Normalizing map w = phase (z - a)/(z - b): picks the rotation that sends
    // the disc to the upper half-plane. The image line of the unit circle has
    // direction i a/(a-b) at w = 0.
    Cplx u = Cplx(0, 1) * a / (a - b);
    Cplx phase = std::conj(u) / std::abs(u);
    Cplx interior_image = phase * (Cplx(0, 0) - a) / (Cplx(0, 0) - b);
    if (interior_image.imag() < 0.0) phase = -phase;
    return SubregionSpec(HypercyclicLuneSpec{a, b, alpha, beta, phase});
}

Cplx HypercyclicLuneSpec::to_halfplane(Cplx z) const {
    return halfplane_phase * (z - endpoint_a) / (z - endpoint_b);
}

SubregionSpec SubregionSpec::ideal_polygon(std::vector<Cplx> vertices) {
    if (vertices.size() < 3)
        throw Error(ErrorCode::InvalidArgument, "ideal polygon needs at least 3 vertices");
    for (Cplx& v : vertices) v = normalize_unit(v, "polygon vertex");
    IdealPolygonSpec poly;
    poly.vertices = vertices;
    std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        Cplx a = vertices[i];
        Cplx b = vertices[(i + 1) % m];
        if (std::abs(a - b) < 1e-12)
            throw Error(ErrorCode::InvalidArgument, "ideal polygon has repeated vertices");
        if (auto circle = geodesic_side_circle(a, b)) {
            poly.sides.emplace_back(*circle);
        } else {
            // Diameter side: interior lies on the side of the chord holding
            // the remaining vertices.
            double sign = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i || j == (i + 1) % m) continue;
                double s = (std::conj(a) * vertices[j]).imag();
                if (std::abs(s) < 1e-9) continue;
                if (sign == 0.0) sign = s > 0 ? 1.0 : -1.0;
                else if (sign * s < 0.0)
                    throw Error(ErrorCode::InvalidArgument,
                                "ideal polygon vertices are not in cyclic order");
            }
            if (sign == 0.0)
                throw Error(ErrorCode::InvalidArgument, "degenerate ideal polygon side");
            poly.sides.emplace_back(IdealPolygonSpec::DiameterSide{a, sign});
        }
    }
    return SubregionSpec(std::move(poly));
}

SubregionSpec SubregionSpec::dilated_copy(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::InvalidArgument, "dilation factor must lie in (0,1)");
    return SubregionSpec(DilatedCopySpec{rho});
}

SubregionSpec SubregionSpec::product_region(std::vector<std::pair<double, double>> factors) {
    if (factors.empty())
        throw Error(ErrorCode::InvalidArgument, "product region needs at least one factor");
    for (auto& [lo, hi] : factors)
        if (!(lo >= 0.0 && lo < hi))
            throw Error(ErrorCode::InvalidArgument, "product factors require 0 <= lo < hi");
    return SubregionSpec(ProductRegionSpec{std::move(factors)});
}

SubregionSpec SubregionSpec::complement(SubregionSpec inner) {
    return SubregionSpec(ComplementSpec{std::make_shared<SubregionSpec>(std::move(inner))});
}

SubregionSpec SubregionSpec::indicator(std::string label,
                                       std::function<bool(const Point&)> pred) {
    return SubregionSpec(IndicatorSpec{std::move(label), std::move(pred)});
}

std::string SubregionSpec::kind_name() const {
    struct Visitor {
        std::string operator()(const DiscSpec&) const { return "Disc"; }
        std::string operator()(const HorodiscSpec&) const { return "Horodisc"; }
        std::string operator()(const HorocyclicStripSpec&) const { return "HorocyclicStrip"; }
        std::string operator()(const HypercyclicLuneSpec&) const { return "HypercyclicLune"; }
        std::string operator()(const IdealPolygonSpec&) const { return "IdealPolygon"; }
        std::string operator()(const DilatedCopySpec&) const { return "DilatedCopy"; }
        std::string operator()(const ProductRegionSpec&) const { return "ProductRegion"; }
        std::string operator()(const ComplementSpec&) const { return "Complement"; }
        std::string operator()(const IndicatorSpec&) const { return "Indicator"; }
    };
    return std::visit(Visitor{}, value_);
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool contains(const SubregionSpec& region, const AmbientDomain& ambient, const Point& z,
              double boundary_tol, double margin, bool closed) {
    require_dimension(ambient, z);

    if (const auto* d = region.get_if<DiscSpec>()) {
        require_disc_ambient(ambient, "Disc");
        return cmp(std::abs(z[0] - d->center), d->radius, margin, closed);
    }
    if (const auto* h = region.get_if<HorodiscSpec>()) {
        require_disc_ambient(ambient, "Horodisc");
        DiscSpec d = horodisc_as_disc(*h);
        return cmp(std::abs(z[0] - d.center), d.radius, margin, closed);
    }
    if (const auto* s = region.get_if<HorocyclicStripSpec>()) {
        require_disc_ambient(ambient, "HorocyclicStrip");
        DiscSpec outer = horodisc_as_disc(HorodiscSpec{s->tangency_angle, s->rho2});
        DiscSpec inner = horodisc_as_disc(HorodiscSpec{s->tangency_angle, s->rho1});
        return cmp(std::abs(z[0] - outer.center), outer.radius, margin, closed) &&
               cmp_out(std::abs(z[0] - inner.center), inner.radius, margin, closed);
    }
    if (const auto* l = region.get_if<HypercyclicLuneSpec>()) {
        require_disc_ambient(ambient, "HypercyclicLune");
        if (!cmp(std::abs(z[0]), 1.0, margin, closed)) return false;
        if (std::abs(z[0] - l->endpoint_b) == 0.0) return false;
        double theta = std::arg(l->to_halfplane(z[0]));
        return cmp(theta, l->beta, margin, closed) && cmp_out(theta, l->alpha, margin, closed);
    }
    if (const auto* p = region.get_if<IdealPolygonSpec>()) {
        require_disc_ambient(ambient, "IdealPolygon");
        if (!cmp(std::abs(z[0]), 1.0, margin, closed)) return false;
        for (const auto& side : p->sides) {
            if (const auto* circ = std::get_if<SideCircle>(&side)) {
                if (!cmp_out(std::abs(z[0] - circ->center), circ->radius, margin, closed))
                    return false;
            } else {
                const auto& diam = std::get<IdealPolygonSpec::DiameterSide>(side);
                double s = diam.sign * (std::conj(diam.direction) * z[0]).imag();
                if (!cmp_out(s, 0.0, margin, closed)) return false;
            }
        }
        return true;
    }
    if (const auto* d = region.get_if<DilatedCopySpec>()) {
        switch (ambient.kind()) {
            case AmbientKind::UnitDisc:
            case AmbientKind::UnitBall:
                return cmp(std::sqrt(norm2(z)), d->rho, margin, closed);
            case AmbientKind::Polydisc:
                for (std::size_t i = 0; i < z.size(); ++i)
                    if (!cmp(std::abs(z[i]), d->rho * ambient.radii()[i], margin, closed))
                        return false;
                return true;
        }
        return false;
    }
    if (const auto* p = region.get_if<ProductRegionSpec>()) {
        if (ambient.kind() == AmbientKind::UnitBall && ambient.dimension() > 1)
            throw Error(ErrorCode::DimensionMismatch,
                        "ProductRegion requires a polydisc (or disc) ambient");
        if (p->factors.size() != z.size())
            throw Error(ErrorCode::DimensionMismatch, "ProductRegion factor count mismatch");
        for (std::size_t i = 0; i < z.size(); ++i) {
            double r = std::abs(z[i]);
            if (!cmp(r, p->factors[i].second, margin, closed)) return false;
            if (p->factors[i].first > 0.0 &&
                !cmp_out(r, p->factors[i].first, margin, closed))
                return false;
        }
        return true;
    }
    if (const auto* c = region.get_if<ComplementSpec>()) {
        if (!ambient.contains(z, margin, closed)) return false;
        // Outside the inner closure; the closure is grown by boundary_tol.
        return !contains(*c->inner, ambient, z, boundary_tol, boundary_tol - margin, true);
    }
    if (const auto* ind = region.get_if<IndicatorSpec>()) {
        if (!ind->predicate)
            throw Error(ErrorCode::InvalidArgument,
                        "indicator region '" + ind->label + "' has no bound predicate");
        return ind->predicate(z);
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled region kind");
}

std::pair<double, double> lune_to_wedge(const HypercyclicLuneSpec& lune) {
    return {lune.alpha, lune.beta};
}

}  // namespace bergman::geometry
