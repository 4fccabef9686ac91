#include "relspec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace relspec {

RadialField apply_pseudorel(const RadialField& f, const SymbolParams& params) {
    return apply_multiplier(f, [&](double rho) { return pseudorel_symbol(rho, params); });
}

RadialField apply_limit(const RadialField& f) {
    return apply_multiplier(f, [](double rho) { return rho * rho + 1.0; });
}

RadialField apply_pseudorel_inverse(const RadialField& f, const SymbolParams& params) {
    return apply_multiplier(f, [&](double rho) { return 1.0 / pseudorel_symbol(rho, params); });
}

RadialField apply_limit_inverse(const RadialField& f) {
    return apply_multiplier(f, [](double rho) { return 1.0 / (rho * rho + 1.0); });
}

RadialField apply_symbol_diff(const RadialField& f, const SymbolParams& params) {
    return apply_multiplier(f, [&](double rho) { return -symbol_diff(rho, params); });
}

RadialField apply_inverse_diff(const RadialField& f, const SymbolParams& params) {
    return apply_multiplier(f, [&](double rho) { return inverse_diff(rho, params); });
}

LinearOperatorHandle multiplier_handle(const GridPtr& grid, std::function<double(double)> symbol) {
    LinearOperatorHandle h;
    h.kind = LinearOperatorHandle::Kind::multiplier;
    h.grid = grid;
    h.apply = [symbol = std::move(symbol)](const RadialField& f) { return apply_multiplier(f, symbol); };
    return h;
}

LinearOperatorHandle pseudorel_handle(const GridPtr& grid, const SymbolParams& params) {
    LinearOperatorHandle h = multiplier_handle(grid, [params](double rho) { return pseudorel_symbol(rho, params); });
    h.params = params;
    return h;
}

LinearOperatorHandle limit_handle(const GridPtr& grid) {
    return multiplier_handle(grid, [](double rho) { return rho * rho + 1.0; });
}

FredholmFactor::FredholmFactor(const GroundState& state, bool retain_matrix)
    : grid_(state.field.grid), p_(state.p), weight_(grid_) {
    const std::size_t K = grid_->points();
    for (std::size_t j = 0; j < K; ++j)
        weight_.values[j] = p_ * std::pow(state.field.values[j], p_ - 1.0);
    weight_.center = p_ * std::pow(center_value(state.field), p_ - 1.0);

    // dim 1 works on the augmented coordinates (u(0), u(h), ..., u(R)) so the
    // dense factor matches the transform algebra exactly
    const std::size_t n = augmented_size();
    Eigen::MatrixXd mat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RadialField basis(grid_);
        if (grid_->dim() == 1) {
            basis.center = j == 0 ? 1.0 : 0.0;
            if (j > 0) basis.values[j - 1] = 1.0;
        } else {
            basis.values[j] = 1.0;
        }
        const RadialField col = apply(basis);
        if (grid_->dim() == 1)
            mat(0, static_cast<Eigen::Index>(j)) = center_value(col);
        for (std::size_t i = 0; i < K; ++i)
            mat(static_cast<Eigen::Index>(i + n - K), static_cast<Eigen::Index>(j)) = col.values[i];
    }
    if (retain_matrix)
        retained_ = std::make_shared<Eigen::MatrixXd>(mat);
    lu_.compute(mat);

    const Eigen::VectorXd diag = lu_.matrixLU().diagonal().cwiseAbs();
    const double dmax = diag.maxCoeff();
    if (!(dmax > 0.0) || diag.minCoeff() < 1e-13 * dmax)
        throw SingularCore("core factor is numerically singular on this grid");
}

std::size_t FredholmFactor::augmented_size() const {
    return grid_->points() + (grid_->dim() == 1 ? 1 : 0);
}

RadialField FredholmFactor::apply(const RadialField& f) const {
    require_same_grid(f, weight_);
    RadialField smoothed = apply_limit_inverse(f);
    RadialField out = f - pointwise_multiply(weight_, smoothed);
    if (grid_->dim() == 1 && !out.center)
        out.center = center_value(f) - center_value(weight_) * center_value(smoothed);
    return out;
}

RadialField FredholmFactor::solve(const RadialField& f) const {
    require_same_grid(f, weight_);
    const std::size_t K = grid_->points();
    const std::size_t n = augmented_size();
    Eigen::VectorXd rhs(n);
    if (grid_->dim() == 1) rhs[0] = center_value(f);
    for (std::size_t i = 0; i < K; ++i)
        rhs[static_cast<Eigen::Index>(i + n - K)] = f.values[i];
    const Eigen::VectorXd x = lu_.solve(rhs);
    RadialField out(grid_);
    if (grid_->dim() == 1) out.center = x[0];
    for (std::size_t i = 0; i < K; ++i)
        out.values[i] = x[static_cast<Eigen::Index>(i + n - K)];
    return out;
}

LinearOperatorHandle FredholmFactor::handle() const {
    LinearOperatorHandle h;
    h.kind = LinearOperatorHandle::Kind::dense;
    h.grid = grid_;
    h.apply = [this](const RadialField& f) { return apply(f); };
    return h;
}

RadialField apply_perturbation(const RadialField& f, const SymbolParams& params, const FredholmFactor& core) {
    RadialField g = core.solve(f);
    RadialField h = apply_inverse_diff(g, params);
    return pointwise_multiply(core.weight(), h);
}

RadialField apply_linearized(const RadialField& f, const SymbolParams& params, const FredholmFactor& core) {
    RadialField pf = apply_pseudorel(f, params);
    return pf - pointwise_multiply(core.weight(), f);
}

RadialField apply_linearized_inverse(const RadialField& f, const SymbolParams& params,
                                     const FredholmFactor& core, NeumannStats* stats) {
    const double fnorm = norm_l2(f);
    RadialField sum = f;
    if (fnorm > 0.0) {
        RadialField term = f;
        int k = 0;
        double tnorm = fnorm;
        while (tnorm >= kNeumannRelTol * fnorm) {
            if (k >= kNeumannMaxTerms)
                throw NeumannDivergence("Neumann series for the middle inverse did not reach tolerance; raise c");
            term = -1.0 * apply_perturbation(term, params, core);
            sum = sum + term;
            tnorm = norm_l2(term);
            ++k;
        }
        if (stats) {
            stats->terms = k;
            stats->last_term_norm = tnorm;
        }
    }
    return apply_pseudorel_inverse(core.solve(sum), params);
}

double perturbation_norm_probe(const SymbolParams& params, const FredholmFactor& core, DetRng& rng,
                               int iterations) {
    RadialField x = random_band_limited(core.grid(), rng);
    double xnorm = norm_l2(x);
    std::vector<double> growth;
    growth.reserve(iterations);
    for (int i = 0; i < iterations; ++i) {
        RadialField y = apply_perturbation(x, params, core);
        const double ynorm = norm_l2(y);
        if (!(ynorm > 0.0) || !(xnorm > 0.0)) return 0.0;
        growth.push_back(ynorm / xnorm);
        x = (1.0 / ynorm) * y;
        xnorm = 1.0;
    }
    // complex eigenvalue pairs make single ratios oscillate; a trailing
    // geometric mean settles on the modulus
    const std::size_t tail = std::min<std::size_t>(10, growth.size());
    double acc = 0.0;
    for (std::size_t i = growth.size() - tail; i < growth.size(); ++i)
        acc += std::log(growth[i]);
    return std::exp(acc / static_cast<double>(tail));
}

namespace {

double w2q_norm(const RadialField& f, double q) {
    const NormSet n = norms(f, q);
    RadialField d2(f.grid);
    d2.values = radial_second_derivative(f);
    return n.w1q + norm_lq(d2, q);
}

} // namespace

NormEquivalenceProbe norm_equivalence_probe(const SymbolParams& params, const GridPtr& grid, double q,
                                            int trials, DetRng& rng) {
    if (trials < 1)
        throw InvalidParams("norm equivalence probe needs at least one trial");
    NormEquivalenceProbe probe;
    probe.min_first = probe.min_second = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        RadialField f = t == 0 ? sample_field(grid, [](double r) { return std::exp(-0.5 * r * r); })
                               : random_band_limited(grid, rng);
        const RadialField pf = apply_pseudorel(f, params);
        const double num = norm_lq(pf, q);
        const NormSet nf = norms(f, q);
        const double first = num / nf.w1q;
        const double second = num / w2q_norm(f, q);
        probe.min_first = std::min(probe.min_first, first);
        probe.max_first = std::max(probe.max_first, first);
        probe.min_second = std::min(probe.min_second, second);
        probe.max_second = std::max(probe.max_second, second);
    }
    return probe;
}

namespace {

struct DecayRatios {
    double plain;
    double smoothing;
};

DecayRatios operator_decay_ratios(const RadialField& f, const SymbolParams& params, double q) {
    const double s = params.s;
    const RadialField af = apply_inverse_diff(f, params);
    const double num = norm_lq(af, q);
    const double plain_env = std::pow(params.c, -2.0 * s / (1.0 - s));
    const RadialField sf =
        apply_multiplier(f, [s](double rho) { return std::pow(rho * rho + 1.0, -(1.0 - s)); });
    const double smooth_env = std::pow(params.c, -2.0 * s * s / (1.0 - s));
    return {num / (plain_env * norm_lq(f, q)), num / (smooth_env * norm_lq(sf, q))};
}

constexpr std::uint64_t kOperatorCalibrationSeed = 0x9e3779b97f4a7c15ULL;
const double kOperatorCalibrationC[3] = {2.0, 8.0, 32.0};

} // namespace

OperatorDecayConstants calibrate_operator_decay(const GridPtr& grid, double s, double q) {
    DetRng rng(kOperatorCalibrationSeed);
    OperatorDecayConstants constants;
    for (int t = 0; t < 10; ++t) {
        const RadialField f = random_band_limited(grid, rng);
        for (double c : kOperatorCalibrationC) {
            const SymbolParams params = SymbolParams::make_normalized(s, c);
            const DecayRatios r = operator_decay_ratios(f, params, q);
            constants.plain = std::max(constants.plain, r.plain);
            constants.smoothing = std::max(constants.smoothing, r.smoothing);
        }
    }
    constants.plain *= 1.25;
    constants.smoothing *= 1.25;
    return constants;
}

OperatorDecayCheck check_operator_decay(const GridPtr& grid, double s, double q,
                                        const OperatorDecayConstants& constants, DetRng& rng, int trials) {
    OperatorDecayCheck check;
    for (int t = 0; t < trials; ++t) {
        const RadialField f = random_band_limited(grid, rng);
        for (double c : kOperatorCalibrationC) {
            const SymbolParams params = SymbolParams::make_normalized(s, c);
            const DecayRatios r = operator_decay_ratios(f, params, q);
            check.worst_plain = std::max(check.worst_plain, r.plain / constants.plain);
            check.worst_smoothing = std::max(check.worst_smoothing, r.smoothing / constants.smoothing);
        }
    }
    check.ok = check.worst_plain <= 1.0 && check.worst_smoothing <= 1.0;
    return check;
}

} // namespace relspec
