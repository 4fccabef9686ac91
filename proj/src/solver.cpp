#include "relspec/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relspec {

namespace {

void validate_config(const SolveConfig& config, const GroundState& state) {
    const int dim = state.field.grid->dim();
    if (!(config.q > dim))
        throw InvalidParams("Lebesgue index q must exceed the dimension");
    if (config.q < 2.0)
        throw QMismatch("Lebesgue index q must be >= 2");
    if (!(config.delta > 0.0))
        throw InvalidParams("ball radius delta must be positive");
    if (!(config.tol > 0.0) || config.max_iter < 1)
        throw InvalidParams("bad stopping parameters");
    if (!(config.p > 1.0))
        throw InvalidParams("nonlinearity exponent p must exceed 1");
    if (config.p != state.p)
        throw InvalidParams("config exponent does not match the ground state");
}

RadialField map_unchecked(const RadialField& w, const SolveConfig& config, const GroundState& state,
                          const FredholmFactor& core, const ForcingTerm& forcing) {
    const RadialField q_w = nonlinear_remainder(w, state);
    return forcing.field + apply_linearized_inverse(q_w, config.params, core);
}

double lipschitz_probe(const SolveConfig& config, const GroundState& state, const FredholmFactor& core,
                       const ForcingTerm& forcing) {
    DetRng rng(config.seed);
    const GridPtr& grid = state.field.grid;
    double worst = 0.0;
    for (int pair = 0; pair < 20; ++pair) {
        RadialField a = random_band_limited(grid, rng);
        RadialField b = random_band_limited(grid, rng);
        const double sa = config.delta * (0.1 + 0.9 * rng.uniform01()) / norms(a, config.q).intersection;
        const double sb = config.delta * (0.1 + 0.9 * rng.uniform01()) / norms(b, config.q).intersection;
        a = sa * a;
        b = sb * b;
        const RadialField fa = map_unchecked(a, config, state, core, forcing);
        const RadialField fb = map_unchecked(b, config, state, core, forcing);
        const double num = norms(fa - fb, config.q).intersection;
        const double den = norms(a - b, config.q).intersection;
        if (den > 0.0) worst = std::max(worst, num / den);
    }
    return worst;
}

} // namespace

RadialField nonlinear_remainder(const RadialField& w, const GroundState& state) {
    require_same_grid(w, state.field);
    RadialField out(w.grid);
    const double p = state.p;
    const auto remainder = [p](double wv, double u) {
        return signed_power(wv + u, p) - std::pow(u, p) - p * std::pow(u, p - 1.0) * wv;
    };
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = remainder(w.values[j], state.field.values[j]);
    out.center = remainder(center_value(w), center_value(state.field));
    return out;
}

ForcingTerm forcing_term(const SymbolParams& params, const GroundState& state, const FredholmFactor& core,
                         double q) {
    const RadialField rhs = apply_symbol_diff(state.field, params);
    ForcingTerm out;
    out.field = apply_linearized_inverse(rhs, params, core);
    out.norms = norms(out.field, q);
    return out;
}

RadialField fixed_point_map(const RadialField& w, const SolveConfig& config, const GroundState& state,
                            const FredholmFactor& core, const ForcingTerm& forcing) {
    RadialField next = map_unchecked(w, config, state, core, forcing);
    const double nrm = norms(next, config.q).intersection;
    if (nrm > config.delta * (1.0 + 1e-12))
        throw BallExit("contraction map left the delta-ball; raise c");
    return next;
}

SolveReport solve(const SolveConfig& config, const GroundState& state, const FredholmFactor& core) {
    validate_config(config, state);

    SolveReport report;
    try {
        const ForcingTerm forcing = forcing_term(config.params, state, core, config.q);
        report.forcing_norm = forcing.norms.intersection;

        RadialField w(state.field.grid);
        double prev_step = std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int iter = 1; iter <= config.max_iter; ++iter) {
            RadialField next = fixed_point_map(w, config, state, core, forcing);
            const double step = norm_l2(next - w);
            w = std::move(next);
            report.trace.push_back({iter, step, norms(w, config.q).intersection});
            report.iterations = iter;
            report.final_step = step;
            if (step < config.tol) {
                converged = true;
                break;
            }
            if (iter >= 3 && step > prev_step && step > 10.0 * config.tol)
                throw NoContraction("fixed-point steps stopped decreasing; raise c");
            prev_step = step;
        }
        if (!converged)
            throw NoContraction("fixed-point iteration exhausted max_iter; raise c");

        report.w = w;
        report.u_c = state.field + w;
        report.w_norms = norms(w, config.q);
        const RadialField lhs = apply_pseudorel(report.u_c, config.params);
        RadialField rhs(w.grid);
        for (std::size_t j = 0; j < rhs.values.size(); ++j)
            rhs.values[j] = signed_power(report.u_c.values[j], config.p);
        rhs.center = signed_power(center_value(report.u_c), config.p);
        report.residual = norm_l2(lhs - rhs) / norm_l2(report.u_c);

        if (config.probe_lipschitz)
            report.lipschitz_probe = lipschitz_probe(config, state, core, forcing);
    } catch (const NeumannDivergence& e) {
        throw NoContraction(std::string("no contraction: ") + e.what());
    } catch (const BallExit& e) {
        throw NoContraction(std::string("no contraction: ") + e.what());
    }
    return report;
}

double discover_c0(SolveConfig config, const GroundState& state, const FredholmFactor& core, int max_steps) {
    config.probe_lipschitz = false;
    for (int step = 0; step < max_steps; ++step) {
        try {
            solve(config, state, core);
            DetRng rng(config.seed);
            if (perturbation_norm_probe(config.params, core, rng) <= 0.5)
                return config.params.c;
        } catch (const NoContraction&) {
            // walk upward
        }
        config.params = SymbolParams::make_normalized(config.params.s, config.params.c * 1.5);
    }
    throw NoContraction("no contraction threshold found within the walk limit");
}

} // namespace relspec
