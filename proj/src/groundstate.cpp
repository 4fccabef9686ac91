#include "relspec/groundstate.hpp"

#include <algorithm>
#include <cmath>

#include "relspec/norms.hpp"
#include "relspec/transform.hpp"

namespace relspec {

double signed_power(double x, double p) {
    return std::copysign(std::pow(std::abs(x), p), x);
}

namespace {

RadialField apply_limit_operator(const RadialField& u) {
    return apply_multiplier(u, [](double rho) { return rho * rho + 1.0; });
}

RadialField apply_limit_inverse(const RadialField& u) {
    return apply_multiplier(u, [](double rho) { return 1.0 / (rho * rho + 1.0); });
}

RadialField pow_field(const RadialField& u, double p) {
    RadialField out(u.grid);
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = signed_power(u.values[j], p);
    if (u.center) out.center = signed_power(*u.center, p);
    return out;
}

void check_exponent(double p, int dim) {
    if (!(p > 1.0))
        throw InvalidParams("nonlinearity exponent p must exceed 1");
    if (dim == 3 && !(p < 5.0))
        throw InvalidParams("p must stay below (N+2)/(N-2) = 5 for dim 3");
}

bool positive_and_decreasing(const RadialField& u) {
    double peak = 0.0;
    for (double v : u.values) peak = std::max(peak, v);
    if (!(peak > 0.0)) return false;
    // below ~1e-8 of the peak the exponential tail drops under the aliasing
    // ripple of the nonlinearity and samples carry no sign information
    const double floor = 1e-8 * peak;
    const double jitter = 1e-12 * peak;
    std::size_t j = 0;
    for (; j + 1 < u.values.size() && u.values[j] >= floor; ++j)
        if (u.values[j + 1] > u.values[j] + jitter) return false;
    for (; j < u.values.size(); ++j)
        if (u.values[j] < -floor) return false;
    return true;
}

GroundState petviashvili_attempt(double p, const GridPtr& grid, double tol, int max_iter,
                                 double seed_amplitude, double& normalization_at_stop) {
    RadialField v = sample_field(grid, [seed_amplitude](double r) {
        return seed_amplitude * std::exp(-0.5 * r * r);
    });
    const double gamma = p / (p - 1.0);
    for (int iter = 0; iter < max_iter; ++iter) {
        const RadialField pv = apply_limit_operator(v);
        const RadialField vp = pow_field(v, p);
        const double num = inner_l2(pv, v);
        const double den = inner_l2(vp, v);
        if (!(den > 0.0))
            throw NoConvergence("normalization denominator collapsed");
        const double m = num / den;
        RadialField next = std::pow(m, gamma) * apply_limit_inverse(vp);
        const double step = norm_l2(next - v);
        v = std::move(next);
        if (step < tol) {
            normalization_at_stop = m;
            GroundState gs;
            gs.field = std::move(v);
            gs.p = p;
            gs.normalization = m;
            gs.method = GroundState::Method::petviashvili;
            gs.residual = limit_equation_residual(gs.field, p);
            return gs;
        }
    }
    throw NoConvergence("normalized fixed-point iteration did not converge");
}

} // namespace

double limit_equation_residual(const RadialField& u, double p) {
    const RadialField lhs = apply_limit_operator(u);
    const RadialField rhs = pow_field(u, p);
    return norm_l2(lhs - rhs) / norm_l2(u);
}

GroundState closed_form_1d(double p, const GridPtr& grid) {
    if (grid->dim() != 1)
        throw DimMismatch("closed-form soliton is one-dimensional");
    check_exponent(p, grid->dim());
    const double amp = std::pow((p + 1.0) / 2.0, 1.0 / (p - 1.0));
    const double rate = (p - 1.0) / 2.0;
    const double sech_pow = 2.0 / (p - 1.0);
    GroundState gs;
    gs.field = sample_field(grid, [=](double r) {
        return amp * std::pow(1.0 / std::cosh(rate * r), sech_pow);
    });
    gs.p = p;
    gs.method = GroundState::Method::closed_form;
    gs.residual = limit_equation_residual(gs.field, p);
    return gs;
}

GroundState petviashvili(double p, const GridPtr& grid, double tol, int max_iter) {
    check_exponent(p, grid->dim());
    if (!(tol > 0.0))
        throw InvalidParams("tolerance must be positive");
    double m_stop = 0.0;
    for (double amplitude : {1.0, 2.0}) {  // one retry with a doubled seed
        try {
            GroundState gs = petviashvili_attempt(p, grid, tol, max_iter, amplitude, m_stop);
            if (!positive_and_decreasing(gs.field))
                throw NoConvergence("iterate lost positivity or radial monotonicity");
            return gs;
        } catch (const NoConvergence&) {
            if (amplitude == 2.0) throw;
        }
    }
    throw NoConvergence("unreachable");
}

} // namespace relspec
