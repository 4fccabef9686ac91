#include "relspec/identities.hpp"

#include <cmath>
#include <limits>

#include "relspec/groundstate.hpp"
#include "relspec/norms.hpp"
#include "relspec/transform.hpp"

namespace relspec {

double pohozaev_functional(const RadialField& u, double p, const SymbolParams& params) {
    const GridPtr& grid = u.grid;
    const std::size_t K = grid->points();
    const double N = static_cast<double>(grid->dim());
    const double s = params.s;
    const double a2 = params.a2();
    const double a2s = params.a2s();
    const double b2 = params.b2();

    // (N-2s) int u f(u) - 2N int F(u) + 2 a^2 s int u (a^2-b^2 Delta)^{s-1} u
    // with the kappa * a^{2s} blocks cancelled against the nonlocal term
    // before quadrature: kappa ~ -a^{2s} grows like c^{2s/(1-s)} and would
    // otherwise swamp the O(||u||^2) result.
    //   = ((N-2s) - 2N/(p+1)) int |u|^{p+1} + 2 s mu int u^2
    //     + 2 s int u * a^{2s}((1 + b^2 rho^2/a^2)^{s-1} - 1) u
    const double u0 = center_value(u);
    std::vector<double> upow(K), usq(K);
    for (std::size_t j = 0; j < K; ++j) {
        const double v = u.values[j];
        upow[j] = std::pow(std::abs(v), p + 1.0);
        usq[j] = v * v;
    }
    const double ip1 = integrate_radial(grid, std::pow(std::abs(u0), p + 1.0), upow);
    const double il2 = integrate_radial(grid, u0 * u0, usq);

    const RadialField tilted = apply_multiplier(u, [&](double rho) {
        return a2s * std::expm1((s - 1.0) * std::log1p(b2 * rho * rho / a2));
    });
    std::vector<double> quad3(K);
    for (std::size_t j = 0; j < K; ++j)
        quad3[j] = u.values[j] * tilted.values[j];
    const double nonlocal = integrate_radial(grid, u0 * center_value(tilted), quad3);

    return ((N - 2.0 * s) - 2.0 * N / (p + 1.0)) * ip1 + 2.0 * s * params.mu * il2 + 2.0 * s * nonlocal;
}

const char* to_string(ExistenceRegime regime) {
    switch (regime) {
        case ExistenceRegime::nonexistence: return "nonexistence_regime";
        case ExistenceRegime::open: return "open";
        case ExistenceRegime::large_c: return "large_c_regime";
    }
    return "?";
}

ExistenceRegime classify_existence(double p, const SymbolParams& params, int dim) {
    if (!(p > 1.0))
        throw InvalidParams("exponent p must exceed 1");
    if (dim < 1)
        throw InvalidParams("dimension must be positive");
    const double N = static_cast<double>(dim);
    const double obstruction = 1.0 / (p + 1.0) - (N - 2.0 * params.s) / (2.0 * N);
    if (params.kappa() >= 0.0 && obstruction <= 0.0)
        return ExistenceRegime::nonexistence;
    const double sobolev_critical =
        dim >= 3 ? (N + 2.0) / (N - 2.0) : std::numeric_limits<double>::infinity();
    if (p < sobolev_critical)
        return ExistenceRegime::large_c;
    return ExistenceRegime::open;
}

double commutator_defect(const RadialField& phi, double s, double a2, double b2) {
    const GridPtr& grid = phi.grid;
    const std::size_t K = grid->points();
    const auto symbol = [&](double rho) { return std::pow(a2 + b2 * rho * rho, s); };
    const auto symbol_down = [&](double rho) { return std::pow(a2 + b2 * rho * rho, s - 1.0); };

    RadialField dilated(grid);  // r phi'(r)
    {
        const std::vector<double> d = radial_derivative(phi);
        for (std::size_t j = 0; j < K; ++j)
            dilated.values[j] = grid->node(j) * d[j];
    }
    const RadialField term1 = apply_multiplier(dilated, symbol);

    const RadialField op_phi = apply_multiplier(phi, symbol);
    RadialField term2(grid);
    {
        const std::vector<double> d = radial_derivative(op_phi);
        for (std::size_t j = 0; j < K; ++j)
            term2.values[j] = grid->node(j) * d[j];
    }

    const RadialField down_phi = apply_multiplier(phi, symbol_down);
    RadialField lhs = term1 - term2;
    RadialField rhs = 2.0 * s * op_phi - (2.0 * a2 * s) * down_phi;
    return norm_l2(lhs - rhs) / norm_l2(rhs);
}

double commutator_defect(const RadialField& phi, const SymbolParams& params) {
    return commutator_defect(phi, params.s, params.a2(), params.b2());
}

ScalingMap ScalingMap::for_parameters(double s, double m, double mu, double p) {
    if (!(s > 0.5 && s < 1.0) || !(m > 0.0) || !(mu > 0.0) || !(p > 1.0))
        throw InvalidParams("scaling map needs s in (1/2,1), m > 0, mu > 0, p > 1");
    // m = s^{1/(2-2s)}, mu = 1: the exponents cancel identically
    if (mu == 1.0 && m == std::pow(s, 1.0 / (2.0 - 2.0 * s)))
        return ScalingMap{};
    ScalingMap map;
    map.amplitude = std::pow(mu, 1.0 / (1.0 - p));
    map.dilation = std::sqrt(s / (mu * std::pow(m, 2.0 - 2.0 * s)));
    map.speed_factor = std::sqrt(s) * std::pow(mu, (1.0 - s) / (2.0 * s)) / std::pow(m, 1.0 - s);
    if (!(map.amplitude > 0.0) || !(map.dilation > 0.0) || !(map.speed_factor > 0.0))
        throw InvalidParams("degenerate scaling map");
    return map;
}

ScalingMap ScalingMap::for_parameters(const SymbolParams& params, double p) {
    if (params.normalized)
        return ScalingMap{};
    return for_parameters(params.s, params.m, params.mu, p);
}

double interpolate(const RadialField& u, double r) {
    const RadialGrid& g = *u.grid;
    const std::size_t K = g.points();
    const double h = g.spacing();
    if (r > g.radius() * (1.0 + 1e-12))
        throw SupportOverflow("interpolation point beyond the grid radius");

    // logical sample index: 0 -> center, j -> u(j h); even reflection below 0
    const auto sample = [&](long long j) -> double {
        if (j < 0) j = -j;
        if (j == 0) return center_value(u);
        if (static_cast<std::size_t>(j) > K) throw SupportOverflow("interpolation stencil beyond the grid");
        return u.values[static_cast<std::size_t>(j) - 1];
    };

    const double x = r / h;
    long long base = static_cast<long long>(std::floor(x));
    if (base > static_cast<long long>(K) - 2) base = static_cast<long long>(K) - 2;  // shift at the edge
    const long long i0 = base - 1;
    double result = 0.0;
    for (int a = 0; a < 4; ++a) {
        double weight = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            weight *= (x - static_cast<double>(i0 + b)) / static_cast<double>(a - b);
        }
        result += weight * sample(i0 + a);
    }
    return result;
}

RadialField scale_field(const RadialField& v, const ScalingMap& map, bool forward_direction,
                        const GridPtr& target) {
    const double sigma = forward_direction ? map.dilation : 1.0 / map.dilation;
    const double amp = forward_direction ? map.amplitude : 1.0 / map.amplitude;
    if (sigma * target->radius() > v.grid->radius() * (1.0 + 1e-12))
        throw SupportOverflow("dilated support exceeds the source grid radius");
    RadialField out(target);
    for (std::size_t j = 0; j < target->points(); ++j)
        out.values[j] = amp * interpolate(v, sigma * target->node(j));
    out.center = amp * center_value(v);
    return out;
}

} // namespace relspec
