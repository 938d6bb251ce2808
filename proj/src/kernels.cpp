#include "bergman/kernels.hpp"

#include <cmath>

#include "bergman/error.hpp"

namespace bergman::kernels {

using geometry::AmbientDomain;
using geometry::AmbientKind;

namespace {

void append_degree(std::vector<MultiIndex>& out, MultiIndex& prefix, int axes_left, int degree) {
    if (axes_left == 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int a = degree; a >= 0; --a) {
        prefix.push_back(a);
        append_degree(out, prefix, axes_left - 1, degree - a);
        prefix.pop_back();
    }
}

void require_alpha(const AmbientDomain& ambient, const MultiIndex& alpha) {
    if (static_cast<int>(alpha.size()) != ambient.dimension())
        throw Error(ErrorCode::DimensionMismatch, "multi-index does not match ambient dimension");
    for (int a : alpha)
        if (a < 0) throw Error(ErrorCode::InvalidArgument, "multi-index entries must be >= 0");
}

}  // namespace

MonomialBasis make_basis(const AmbientDomain& ambient, int order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "basis order must be >= 1");
    MonomialBasis basis{ambient, order, {}, {}};
    int n = ambient.dimension();
    MultiIndex prefix;
    prefix.reserve(n);
    for (int d = 0; d < order; ++d) append_degree(basis.index_list, prefix, n, d);
    basis.norms.reserve(basis.index_list.size());
    for (const MultiIndex& alpha : basis.index_list)
        basis.norms.push_back(std::sqrt(monomial_norm_sq(ambient, alpha)));
    return basis;
}

std::vector<Cplx> MonomialBasis::evaluate(const Point& z) const {
    if (static_cast<int>(z.size()) != ambient.dimension())
        throw Error(ErrorCode::DimensionMismatch, "point does not match basis dimension");
    int n = ambient.dimension();
    // Coordinate power table up to the maximal per-axis degree.
    std::vector<std::vector<Cplx>> pow_table(n);
    for (int i = 0; i < n; ++i) {
        pow_table[i].resize(order + 1);
        pow_table[i][0] = Cplx(1, 0);
        for (int k = 1; k <= order; ++k) pow_table[i][k] = pow_table[i][k - 1] * z[i];
    }
    std::vector<Cplx> values(index_list.size());
    for (std::size_t j = 0; j < index_list.size(); ++j) {
        Cplx m(1, 0);
        for (int i = 0; i < n; ++i) m *= pow_table[i][index_list[j][i]];
        values[j] = m / norms[j];
    }
    return values;
}

double monomial_norm_sq(const AmbientDomain& ambient, const MultiIndex& alpha) {
    require_alpha(ambient, alpha);
    int n = ambient.dimension();
    switch (ambient.kind()) {
        case AmbientKind::UnitDisc:
            return kPi / (alpha[0] + 1.0);
        case AmbientKind::UnitBall: {
            if (n == 1) return kPi / (alpha[0] + 1.0);
            double log_value = n * std::log(kPi) - std::lgamma(n + total_degree(alpha) + 1.0);
            for (int a : alpha) log_value += std::lgamma(a + 1.0);
            return std::exp(log_value);
        }
        case AmbientKind::Polydisc: {
            double v = 1.0;
            for (int i = 0; i < n; ++i) {
                double r = ambient.radii()[i];
                v *= kPi * std::pow(r, 2.0 * alpha[i] + 2.0) / (alpha[i] + 1.0);
            }
            return v;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled ambient kind");
}

double bergman_kernel_diag(const AmbientDomain& ambient, const Point& z) {
    if (!ambient.contains(z))
        throw Error(ErrorCode::DomainError, "Bergman kernel diverges on and outside the boundary");
    int n = ambient.dimension();
    switch (ambient.kind()) {
        case AmbientKind::UnitDisc:
        case AmbientKind::UnitBall: {
            double r2 = 0.0;
            for (const Cplx& c : z) r2 += std::norm(c);
            double factorial = 1.0;
            for (int i = 2; i <= n; ++i) factorial *= i;
            return factorial / std::pow(kPi, n) * std::pow(1.0 - r2, -(n + 1.0));
        }
        case AmbientKind::Polydisc: {
            double v = 1.0;
            for (int i = 0; i < n; ++i) {
                double r2 = ambient.radii()[i] * ambient.radii()[i];
                double d = r2 - std::norm(z[i]);
                v *= r2 / (kPi * d * d);
            }
            return v;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled ambient kind");
}

}  // namespace bergman::kernels
