#include "bergman/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "bergman/error.hpp"
#include "bergman/parallel.hpp"

namespace bergman::moments {

using geometry::AmbientDomain;
using geometry::AmbientKind;
using geometry::SubregionSpec;

namespace {

void require_planar(const AmbientDomain& ambient, const char* what) {
    if (!ambient.is_disc_like())
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + " is restricted to the planar (n = 1) ambient");
}

// Log-space evaluation of the real-center moment series: all terms are
// positive, so a max-shifted exponential sum is exact to rounding.
double disc_moment_real_center(double s, double r, int j, int k) {
    int m_max = std::min(j, k);
    if (s == 0.0) return j == k ? kPi * std::pow(r, 2.0 * j + 2.0) / (j + 1.0) : 0.0;
    double log_s = std::log(s), log_r = std::log(r);
    std::vector<double> logs(m_max + 1);
    double peak = -HUGE_VAL;
    for (int m = 0; m <= m_max; ++m) {
        double log_binoms = std::lgamma(j + 1.0) - std::lgamma(m + 1.0) - std::lgamma(j - m + 1.0) +
                            std::lgamma(k + 1.0) - std::lgamma(m + 1.0) - std::lgamma(k - m + 1.0);
        logs[m] = log_binoms + (j + k - 2.0 * m) * log_s + (2.0 * m + 2.0) * log_r -
                  std::log(m + 1.0) + std::log(kPi);
        peak = std::max(peak, logs[m]);
    }
    double sum = 0.0;
    for (int m = 0; m <= m_max; ++m) sum += std::exp(logs[m] - peak);
    return std::exp(peak) * sum;
}

GramMatrix make_gram_shell(const MomentRequest& request) {
    GramMatrix g{request.ambient, request.order, {}, {}, 0.0, false};
    kernels::MonomialBasis basis = kernels::make_basis(request.ambient, request.order);
    g.index_list = std::move(basis.index_list);
    g.entries.assign(g.size() * g.size(), Cplx(0, 0));
    return g;
}

// Disc Gram through the real-center moment plus the exact rotation
// conjugation G[j][k] = e^{i(j-k)theta} G0[j][k], so rotated regions are
// exactly isospectral.
GramMatrix disc_gram(const MomentRequest& request, Cplx center, double radius) {
    require_planar(request.ambient, "disc Gram");
    if (std::abs(center) + radius > 1.0 + 1e-12)
        throw Error(ErrorCode::DomainError, "disc is not contained in the unit disc");
    GramMatrix g = make_gram_shell(request);
    int n_entries = static_cast<int>(g.size());
    double s = std::abs(center);
    double theta = s == 0.0 ? 0.0 : std::arg(center);
    for (int j = 0; j < n_entries; ++j) {
        for (int k = j; k < n_entries; ++k) {
            double raw = disc_moment_real_center(s, radius, j, k);
            double normalized = raw * std::sqrt((j + 1.0) * (k + 1.0)) / kPi;
            Cplx value = std::polar(normalized, theta * (j - k));
            g.at(j, k) = value;
            g.at(k, j) = std::conj(value);
        }
    }
    return g;
}

GramMatrix dilated_gram(const MomentRequest& request, double rho) {
    GramMatrix g = make_gram_shell(request);
    int n = request.ambient.dimension();
    for (std::size_t j = 0; j < g.size(); ++j)
        g.at(j, j) = std::pow(rho, 2.0 * (total_degree(g.index_list[j]) + n));
    return g;
}

GramMatrix product_gram(const MomentRequest& request,
                        const geometry::ProductRegionSpec& product) {
    const AmbientDomain& ambient = request.ambient;
    if (ambient.kind() == AmbientKind::UnitBall && ambient.dimension() > 1)
        throw Error(ErrorCode::DimensionMismatch,
                    "ProductRegion requires a polydisc (or disc) ambient");
    if (static_cast<int>(product.factors.size()) != ambient.dimension())
        throw Error(ErrorCode::DimensionMismatch, "ProductRegion factor count mismatch");
    for (std::size_t i = 0; i < product.factors.size(); ++i)
        if (product.factors[i].second > ambient.radii()[i] + 1e-12)
            throw Error(ErrorCode::DomainError, "product factor exceeds the ambient radius");
    GramMatrix g = make_gram_shell(request);
    for (std::size_t j = 0; j < g.size(); ++j) {
        double lambda = 1.0;
        const MultiIndex& alpha = g.index_list[j];
        for (std::size_t i = 0; i < product.factors.size(); ++i) {
            auto [lo, hi] = product.factors[i];
            double e = 2.0 * alpha[i] + 2.0;
            lambda *= (std::pow(hi, e) - std::pow(lo, e)) / std::pow(ambient.radii()[i], e);
        }
        g.at(j, j) = lambda;
    }
    return g;
}

GramMatrix quadrature_gram(const MomentRequest& request) {
    require_planar(request.ambient, "quadrature Gram");
    GramMatrix g = make_gram_shell(request);
    int n_entries = static_cast<int>(g.size());
    std::vector<std::pair<int, int>> jobs;
    for (int j = 0; j < n_entries; ++j)
        for (int k = j; k < n_entries; ++k) jobs.emplace_back(j, k);

    struct EntryResult {
        Cplx value;
        double error;
        bool truncated;
    };
    std::vector<EntryResult> results(jobs.size());
    std::mutex failure_mutex;
    std::exception_ptr failure;
    parallel_for(jobs.size(), [&](std::size_t idx) {
        try {
            auto [j, k] = jobs[idx];
            QuadResult q = quadrature_integral(
                request.region, request.ambient,
                [j = j, k = k](Cplx z) { return powi(z, j) * std::conj(powi(z, k)); },
                request.quad.budget, request.quad.depth);
            double norm_product = kPi / std::sqrt((j + 1.0) * (k + 1.0));
            results[idx] = {q.value / norm_product, q.error_estimate / norm_product, q.truncated};
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    double error_sq = 0.0;
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
        auto [j, k] = jobs[idx];
        g.at(j, k) = results[idx].value;
        g.at(k, j) = std::conj(results[idx].value);
        double e = results[idx].error;
        error_sq += (j == k ? 1.0 : 2.0) * e * e;
        g.truncated_quality = g.truncated_quality || results[idx].truncated;
    }
    g.error_estimate = std::sqrt(error_sq);
    return g;
}

}  // namespace

GramMatrix GramMatrix::identity_like(const GramMatrix& g) {
    GramMatrix id = g;
    std::fill(id.entries.begin(), id.entries.end(), Cplx(0, 0));
    for (std::size_t j = 0; j < id.size(); ++j) id.at(j, j) = Cplx(1, 0);
    id.error_estimate = 0.0;
    id.truncated_quality = false;
    return id;
}

Cplx disc_moment(const AmbientDomain& ambient, Cplx center, double radius, int j, int k) {
    require_planar(ambient, "disc_moment");
    if (j < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "moment degrees must be >= 0");
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "moment radius must be positive");
    if (std::abs(center) + radius > 1.0 + 1e-12)
        throw Error(ErrorCode::DomainError, "disc is not contained in the unit disc");
    double s = std::abs(center);
    double raw = disc_moment_real_center(s, radius, j, k);
    double theta = s == 0.0 ? 0.0 : std::arg(center);
    return std::polar(raw, theta * (j - k));
}

bool has_closed_form(const SubregionSpec& region) {
    if (region.get_if<geometry::DiscSpec>() || region.get_if<geometry::HorodiscSpec>() ||
        region.get_if<geometry::HorocyclicStripSpec>() ||
        region.get_if<geometry::DilatedCopySpec>() ||
        region.get_if<geometry::ProductRegionSpec>())
        return true;
    if (const auto* c = region.get_if<geometry::ComplementSpec>())
        return has_closed_form(*c->inner);
    return false;
}

GramMatrix gram(const MomentRequest& request) {
    if (request.order < 1) throw Error(ErrorCode::InvalidArgument, "Gram order must be >= 1");
    Method method = request.method;
    if (method == Method::Auto)
        method = has_closed_form(request.region) ? Method::ClosedForm : Method::Quadrature;
    if (method == Method::ClosedForm && !has_closed_form(request.region))
        throw Error(ErrorCode::InvalidArgument,
                    "no closed form for region kind " + request.region.kind_name());

    if (method == Method::Quadrature) return quadrature_gram(request);

    const SubregionSpec& region = request.region;
    if (const auto* d = region.get_if<geometry::DiscSpec>())
        return disc_gram(request, d->center, d->radius);
    if (const auto* h = region.get_if<geometry::HorodiscSpec>()) {
        geometry::DiscSpec d = geometry::horodisc_as_disc(*h);
        return disc_gram(request, d.center, d.radius);
    }
    if (const auto* s = region.get_if<geometry::HorocyclicStripSpec>()) {
        geometry::DiscSpec outer =
            geometry::horodisc_as_disc(geometry::HorodiscSpec{s->tangency_angle, s->rho2});
        geometry::DiscSpec inner =
            geometry::horodisc_as_disc(geometry::HorodiscSpec{s->tangency_angle, s->rho1});
        GramMatrix g = disc_gram(request, outer.center, outer.radius);
        GramMatrix gi = disc_gram(request, inner.center, inner.radius);
        for (std::size_t i = 0; i < g.entries.size(); ++i) g.entries[i] -= gi.entries[i];
        return g;
    }
    if (const auto* d = region.get_if<geometry::DilatedCopySpec>())
        return dilated_gram(request, d->rho);
    if (const auto* p = region.get_if<geometry::ProductRegionSpec>())
        return product_gram(request, *p);
    if (const auto* c = region.get_if<geometry::ComplementSpec>()) {
        MomentRequest inner_request = request;
        inner_request.region = *c->inner;
        GramMatrix inner = gram(inner_request);
        GramMatrix g = GramMatrix::identity_like(inner);
        for (std::size_t i = 0; i < g.entries.size(); ++i) g.entries[i] -= inner.entries[i];
        g.error_estimate = inner.error_estimate;
        g.truncated_quality = inner.truncated_quality;
        return g;
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled closed-form region");
}

quadrature::Box bounding_box(const SubregionSpec& region, const AmbientDomain& ambient) {
    require_planar(ambient, "bounding_box");
    quadrature::Box ambient_box{-1.0, 1.0, -1.0, 1.0};
    auto disc_box = [&](const geometry::DiscSpec& d) {
        return quadrature::Box{std::max(d.center.real() - d.radius, -1.0),
                               std::min(d.center.real() + d.radius, 1.0),
                               std::max(d.center.imag() - d.radius, -1.0),
                               std::min(d.center.imag() + d.radius, 1.0)};
    };
    if (const auto* d = region.get_if<geometry::DiscSpec>()) return disc_box(*d);
    if (const auto* h = region.get_if<geometry::HorodiscSpec>())
        return disc_box(geometry::horodisc_as_disc(*h));
    if (const auto* s = region.get_if<geometry::HorocyclicStripSpec>())
        return disc_box(geometry::horodisc_as_disc(geometry::HorodiscSpec{s->tangency_angle, s->rho2}));
    if (const auto* d = region.get_if<geometry::DilatedCopySpec>())
        return quadrature::Box{-d->rho, d->rho, -d->rho, d->rho};
    if (const auto* p = region.get_if<geometry::ProductRegionSpec>()) {
        double hi = std::min(p->factors[0].second, 1.0);
        return quadrature::Box{-hi, hi, -hi, hi};
    }
    return ambient_box;
}

QuadResult quadrature_integral(const SubregionSpec& region, const AmbientDomain& ambient,
                               const std::function<Cplx(Cplx)>& integrand, std::size_t budget,
                               int depth) {
    require_planar(ambient, "quadrature_integral");
    quadrature::Options opt;
    opt.budget = budget;
    opt.max_depth = depth;
    auto inside = [&](Cplx z) {
        Point p{z};
        return ambient.contains(p) && geometry::contains(region, ambient, p);
    };
    quadrature::Result r =
        quadrature::integrate(inside, integrand, bounding_box(region, ambient), opt);
    return QuadResult{r.value, r.error, r.truncated};
}

}  // namespace bergman::moments
