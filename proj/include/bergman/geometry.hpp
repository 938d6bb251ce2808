#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/types.hpp"

namespace bergman::geometry {

// ---------------------------------------------------------------------------
// Ambient domains
// ---------------------------------------------------------------------------

enum class AmbientKind { UnitDisc, UnitBall, Polydisc };

/// The model domain Omega: unit disc, unit ball in C^n, or a polydisc with
/// per-axis radii. UnitDisc and UnitBall(1) produce identical numerics
/// everywhere; only the spelling is kept.
class AmbientDomain {
public:
    static AmbientDomain unit_disc();
    static AmbientDomain unit_ball(int n);
    static AmbientDomain polydisc(std::vector<double> radii);

    AmbientKind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    const std::vector<double>& radii() const { return radii_; }

    /// True for UnitDisc and UnitBall(1).
    bool is_disc_like() const { return dimension_ == 1 && kind_ != AmbientKind::Polydisc; }

    /// Membership with a signed margin: margin > 0 grows the set, < 0
    /// shrinks it. `closed` switches strict inequalities to non-strict.
    bool contains(const Point& z, double margin = 0.0, bool closed = false) const;

    std::string describe() const;

private:
    AmbientDomain(AmbientKind k, int n, std::vector<double> r)
        : kind_(k), dimension_(n), radii_(std::move(r)) {}

    AmbientKind kind_;
    int dimension_;
    std::vector<double> radii_;
};

// ---------------------------------------------------------------------------
// Disc automorphisms and the Cayley transform
// ---------------------------------------------------------------------------

/// z -> e^{i phase} (z - a) / (1 - conj(a) z), an automorphism of the disc.
class MoebiusMap {
public:
    MoebiusMap(Cplx a, double phase);

    static MoebiusMap identity() { return MoebiusMap(Cplx(0, 0), 0.0); }
    static MoebiusMap rotation(double theta) { return MoebiusMap(Cplx(0, 0), theta); }

    Cplx a() const { return a_; }
    double phase() const { return phase_; }

    Cplx apply(Cplx z) const;
    Cplx apply_inverse(Cplx w) const;
    /// Complex derivative e^{i phase}(1-|a|^2)/(1-conj(a)z)^2.
    Cplx derivative(Cplx z) const;

private:
    Cplx a_;
    double phase_;
};

/// z -> i(1+z)/(1-z), disc onto upper half-plane. Throws DomainError for
/// |z| >= 1.
Cplx cayley(Cplx z);

/// Inverse of cayley: w -> (w-i)/(w+i).
Cplx cayley_inverse(Cplx w);

/// Euclidean circle through two distinct boundary points, orthogonal to the
/// unit circle: center (a+b)/(1+Re(a conj(b))), radius sqrt(|c|^2-1).
/// Returns nullopt when the geodesic is a diameter (b = -a); callers treat
/// that side as a straight chord.
struct SideCircle {
    Cplx center;
    double radius;
};
std::optional<SideCircle> geodesic_side_circle(Cplx a, Cplx b);

// ---------------------------------------------------------------------------
// Subregion catalog
// ---------------------------------------------------------------------------

struct DiscSpec {
    Cplx center;
    double radius;
};

/// Euclidean disc internally tangent to the unit circle at e^{i theta},
/// radius rho: identical to Disc(e^{i theta}(1-rho), rho).
struct HorodiscSpec {
    double tangency_angle;
    double rho;
};

/// Region between two horocycles tangent at the same boundary point,
/// Euclidean radii 0 < rho1 < rho2 < 1.
struct HorocyclicStripSpec {
    double tangency_angle;
    double rho1;
    double rho2;
};

/// Region between two coaxial hypercycles, stored in wedge-normal form:
/// the geodesic axis has ideal endpoints A and B on the unit circle, and
/// after the half-plane map sending A -> 0, B -> infinity the region is the
/// wedge alpha < arg(w) < beta. Angle theta is measured from the boundary
/// arc that maps to the positive real axis (the arc on the B-to-A side);
/// alpha = 0 or beta = pi gives a crescent.
struct HypercyclicLuneSpec {
    Cplx endpoint_a;
    Cplx endpoint_b;
    double alpha;
    double beta;
    Cplx halfplane_phase;  // cached rotation factor of the normalizing map

    /// Disc -> upper half-plane map with endpoint_a -> 0, endpoint_b -> inf;
    /// the axis goes to the positive imaginary ray.
    Cplx to_halfplane(Cplx z) const;
};

/// Region bounded by the complete geodesics through consecutive vertices
/// (>= 3 ideal points in cyclic order). Membership: inside the unit disc and
/// outside every side circle, with diameter sides tested by signed chord
/// side.
struct IdealPolygonSpec {
    struct DiameterSide {
        Cplx direction;  // unit vector along the chord
        double sign;     // interior satisfies sign * Im(conj(direction) z) > 0
    };
    using Side = std::variant<SideCircle, DiameterSide>;

    std::vector<Cplx> vertices;
    std::vector<Side> sides;  // one per consecutive vertex pair, cyclic
};

/// U = rho * Omega for complete Reinhardt Omega.
struct DilatedCopySpec {
    double rho;
};

/// Per-axis radial intervals on a polydisc (or the disc when n = 1):
/// lo_i < |z_i| < hi_i, with lo_i = 0 meaning no inner constraint.
struct ProductRegionSpec {
    std::vector<std::pair<double, double>> factors;
};

class SubregionSpec;

/// Omega minus the closure of the inner region.
struct ComplementSpec {
    std::shared_ptr<const SubregionSpec> inner;
};

/// Opaque membership predicate supplied in-process; quadrature-only path.
struct IndicatorSpec {
    std::string label;
    std::function<bool(const Point&)> predicate;
};

class SubregionSpec {
public:
    using Variant = std::variant<DiscSpec, HorodiscSpec, HorocyclicStripSpec,
                                 HypercyclicLuneSpec, IdealPolygonSpec, DilatedCopySpec,
                                 ProductRegionSpec, ComplementSpec, IndicatorSpec>;

    static SubregionSpec disc(Cplx center, double radius);
    static SubregionSpec horodisc(double tangency_angle, double rho);
    static SubregionSpec horocyclic_strip(double tangency_angle, double rho1, double rho2);
    static SubregionSpec hypercyclic_lune(Cplx endpoint_a, Cplx endpoint_b, double alpha,
                                          double beta);
    static SubregionSpec ideal_polygon(std::vector<Cplx> vertices);
    static SubregionSpec dilated_copy(double rho);
    static SubregionSpec product_region(std::vector<std::pair<double, double>> factors);
    static SubregionSpec complement(SubregionSpec inner);
    static SubregionSpec indicator(std::string label, std::function<bool(const Point&)> pred);

    const Variant& value() const { return value_; }
    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&value_);
    }
    std::string kind_name() const;

private:
    explicit SubregionSpec(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Membership of z in the region, realized inside the given ambient domain.
/// Every set is open; boundary points classify as outside. Complement tests
/// the inner closure with `boundary_tol` added slack (default 0, the exact
/// open-set test). `margin` uniformly grows (>0) or shrinks (<0) the set and
/// exists for measure-zero boundary exclusion in property tests; `closed`
/// tests the closure instead of the interior.
bool contains(const SubregionSpec& region, const AmbientDomain& ambient, const Point& z,
              double boundary_tol = 0.0, double margin = 0.0, bool closed = false);

/// Wedge angles (alpha, beta) of the lune after normalizing its endpoints to
/// {-1, 1} and applying the Cayley map; identity on the stored wedge-normal
/// form.
std::pair<double, double> lune_to_wedge(const HypercyclicLuneSpec& lune);

/// Exact image of a Euclidean disc under a disc automorphism (Moebius maps
/// send circles to circles; computed through three boundary points).
DiscSpec map_disc(const MoebiusMap& map, const DiscSpec& disc);

/// Reduces Horodisc(theta, rho) to its Disc spelling.
DiscSpec horodisc_as_disc(const HorodiscSpec& h);

}  // namespace bergman::geometry
