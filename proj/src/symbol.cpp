#include "relspec/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace relspec {

namespace {

void validate(const SymbolParams& p) {
    if (!(p.s > 0.5 && p.s < 1.0))
        throw InvalidParams("fractional order s must lie in (1/2, 1)");
    if (!(p.c > 0.0))
        throw InvalidParams("light-speed parameter c must be positive");
    if (!p.normalized) {
        if (!(p.m > 0.0)) throw InvalidParams("mass m must be positive");
        if (!(p.mu > 0.0)) throw InvalidParams("frequency shift mu must be positive");
    }
}

void require_normalized(const SymbolParams& p, const char* where) {
    if (!p.normalized)
        throw InvalidParams(std::string(where) + " requires the normalized parameter form");
}

void require_bound_regime(const SymbolParams& p, const char* where) {
    require_normalized(p, where);
    if (p.c < 2.0)
        throw InvalidParams(std::string(where) + " requires c >= 2");
}

// (1+t)^s - 1 - s*t.  The two leading terms cancel to O(t^2); below the
// series threshold the binomial tail is summed directly.
double power_remainder(double s, double t) {
    if (t < 0.1) {
        double coef = s * (s - 1.0) / 2.0;  // binom(s, 2)
        double tk = t * t;
        double sum = 0.0;
        for (int k = 2; k <= 14; ++k) {
            sum += coef * tk;
            coef *= (s - k) / (k + 1.0);
            tk *= t;
        }
        return sum;
    }
    return std::expm1(s * std::log1p(t)) - s * t;
}

double normalized_slack_bracket(double value, double lower, double upper) {
    const double scale = std::max({1.0, std::abs(value), std::abs(upper)});
    return std::min(value - lower, upper - value) / scale;
}

} // namespace

SymbolParams SymbolParams::make_normalized(double s, double c) {
    SymbolParams p;
    p.s = s;
    p.c = c;
    p.m = 0.0;
    p.mu = 1.0;
    p.normalized = true;
    validate(p);
    return p;
}

SymbolParams SymbolParams::make_general(double s, double c, double m, double mu) {
    SymbolParams p;
    p.s = s;
    p.c = c;
    p.m = m;
    p.mu = mu;
    p.normalized = false;
    validate(p);
    return p;
}

double SymbolParams::mass() const {
    return normalized ? std::pow(s, 1.0 / (2.0 - 2.0 * s)) : m;
}

double SymbolParams::a2() const {
    if (normalized)
        return std::pow(s, 1.0 / (1.0 - s)) * std::pow(c, 2.0 / (1.0 - s));
    return m * m * std::pow(c, 2.0 / (1.0 - s));
}

double SymbolParams::a2s() const {
    return std::pow(a2(), s);
}

double SymbolParams::b2() const {
    return c * c;
}

double SymbolParams::kappa() const {
    return mu - a2s();
}

double limit_symbol(double xi) {
    return xi * xi + 1.0;
}

double pseudorel_symbol(double xi, const SymbolParams& params) {
    const double t = params.b2() * xi * xi / params.a2();
    return params.a2s() * std::expm1(params.s * std::log1p(t)) + params.mu;
}

double pseudorel_symbol_derivative(double xi, const SymbolParams& params) {
    // 2 s b^2 xi (a^2 + b^2 xi^2)^{s-1}; under normalization s b^2 a^{2s-2} = 1.
    const double t = params.b2() * xi * xi / params.a2();
    const double d1 = params.normalized
                          ? 1.0
                          : params.s * params.b2() * std::pow(params.a2(), params.s - 1.0);
    return 2.0 * d1 * xi * std::pow(1.0 + t, params.s - 1.0);
}

double crossover_frequency(const SymbolParams& params) {
    const double s = params.s;
    return std::pow(params.c, s / (1.0 - s)) *
           std::sqrt((std::pow(2.0, 1.0 / (1.0 - s)) - 1.0) * std::pow(s, 1.0 / (1.0 - s)));
}

double symbol_diff(double xi, const SymbolParams& params) {
    require_normalized(params, "symbol_diff");
    const double t = params.b2() * xi * xi / params.a2();
    return params.a2s() * power_remainder(params.s, t);
}

double symbol_diff_bound(double xi, const SymbolParams& params) {
    require_normalized(params, "symbol_diff_bound");
    const double s = params.s;
    const double coef = s * (1.0 - s) / (2.0 * std::pow(s, (2.0 - s) / (1.0 - s)));
    const double xi2 = xi * xi;
    return coef * xi2 * xi2 * std::pow(params.c, -2.0 * s / (1.0 - s));
}

double inverse_diff(double xi, const SymbolParams& params) {
    return symbol_diff(xi, params) / (pseudorel_symbol(xi, params) * limit_symbol(xi));
}

double inverse_diff_derivative(double xi, const SymbolParams& params) {
    require_normalized(params, "inverse_diff_derivative");
    const double s = params.s;
    const double t = params.b2() * xi * xi / params.a2();
    const double pc = pseudorel_symbol(xi, params);
    const double pinf = limit_symbol(xi);
    const double diff = params.a2s() * power_remainder(s, t);
    const double dpc = 2.0 * xi * std::pow(1.0 + t, s - 1.0);
    const double dpinf = 2.0 * xi;
    // (P_c' - P_inf') with the leading parts cancelled analytically.
    const double ddiff = 2.0 * xi * std::expm1((s - 1.0) * std::log1p(t));
    return ddiff / (pc * pinf) - diff * dpc / (pc * pc * pinf) - diff * dpinf / (pc * pinf * pinf);
}

double decay_envelope(double xi, const SymbolParams& params) {
    const double s = params.s;
    const double e1 = std::pow(params.c, -2.0 * s / (1.0 - s));
    const double e2 = std::pow(params.c, -2.0 * s * s / (1.0 - s)) *
                      std::pow(xi * xi + 1.0, -(1.0 - s));
    return std::min(e1, e2);
}

BracketEntry low_bracket_entry(double xi, const SymbolParams& params, double rel_tol) {
    require_bound_regime(params, "low_bracket");
    BracketEntry e;
    e.xi = xi;
    e.value = pseudorel_symbol(xi, params);
    e.lower = (xi * xi + 1.0) / 2.0;
    e.upper = xi * xi + 1.0;
    e.slack = normalized_slack_bracket(e.value, e.lower, e.upper);
    e.ok = e.slack >= -rel_tol;
    return e;
}

BracketEntry high_bracket_entry(double xi, const SymbolParams& params, double rel_tol) {
    require_bound_regime(params, "high_bracket");
    const double s = params.s;
    const double d = std::pow(2.0, 1.0 / (1.0 - s)) - 1.0;
    const double ks = std::pow(1.0 + 1.0 / d, s) - std::pow(d, -s);
    const double cx = std::pow(params.c * xi, 2.0 * s);
    BracketEntry e;
    e.xi = xi;
    e.value = pseudorel_symbol(xi, params);
    e.lower = ks * cx + 1.0;
    e.upper = cx + 1.0;
    e.slack = normalized_slack_bracket(e.value, e.lower, e.upper);
    e.ok = e.slack >= -rel_tol;
    return e;
}

DiffEntry diff_entry(double xi, const SymbolParams& params, double rel_tol) {
    require_bound_regime(params, "diff_and_bound");
    DiffEntry e;
    e.xi = xi;
    e.diff = symbol_diff(xi, params);
    e.bound = symbol_diff_bound(xi, params);
    const double scale = std::max({1e-300, e.bound, std::abs(e.diff)});
    e.slack = (e.bound - std::abs(e.diff)) / scale;
    e.ok = e.slack >= -rel_tol;
    return e;
}

DecayEntry decay_entry(double xi, const SymbolParams& params, int order, const DecayConstants& constants,
                       double rel_tol) {
    require_bound_regime(params, "check_multiplier_decay");
    if (order != 0 && order != 1)
        throw InvalidParams("decay check order must be 0 or 1");
    if (order == 1 && !(xi > 0.0))
        throw InvalidParams("order-1 decay check requires xi > 0");
    DecayEntry e;
    e.xi = xi;
    const double env = decay_envelope(xi, params);
    if (order == 0) {
        e.quantity = std::abs(inverse_diff(xi, params));
        e.bound = constants.c0 * env;
        const double ratio = pseudorel_symbol(xi, params) / limit_symbol(xi);
        e.ratio_ok = ratio <= 1.0 + rel_tol;
    } else {
        e.quantity = std::abs(inverse_diff_derivative(xi, params));
        e.bound = constants.c1 / xi * env;
    }
    const double scale = std::max({1e-300, e.bound, e.quantity});
    e.slack = (e.bound - e.quantity) / scale;
    e.ok = (e.slack >= -rel_tol) && e.ratio_ok;
    return e;
}

void check_low_bracket(double xi, const SymbolParams& params) {
    if (xi > crossover_frequency(params) * (1.0 + 1e-15))
        throw InvalidParams("low bracket queried beyond the crossover frequency");
    const BracketEntry e = low_bracket_entry(xi, params);
    if (!e.ok)
        throw BoundViolation("low-frequency symbol bracket violated", e.xi, e.value, e.lower, e.upper);
}

void check_high_bracket(double xi, const SymbolParams& params) {
    if (xi < crossover_frequency(params) * (1.0 - 1e-15))
        throw InvalidParams("high bracket queried below the crossover frequency");
    const BracketEntry e = high_bracket_entry(xi, params);
    if (!e.ok)
        throw BoundViolation("high-frequency symbol bracket violated", e.xi, e.value, e.lower, e.upper);
}

DiffEntry diff_and_bound(double xi, const SymbolParams& params) {
    const DiffEntry e = diff_entry(xi, params);
    if (!e.ok)
        throw BoundViolation("symbol difference exceeds quartic envelope", e.xi, e.diff, -e.bound, e.bound);
    return e;
}

void check_multiplier_decay(double xi, const SymbolParams& params, int order, const DecayConstants& constants) {
    const DecayEntry e = decay_entry(xi, params, order, constants);
    if (!e.ok)
        throw BoundViolation("inverse-symbol decay bound violated", e.xi, e.quantity, 0.0, e.bound);
}

void BoundReport::add(double xi, double slack, bool ok) {
    ++samples;
    if (!ok) ++violations;
    if (slack < worst_slack) {
        worst_slack = slack;
        worst_xi = xi;
    }
}

namespace {

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

} // namespace

DecayConstants calibrate_decay_constants() {
    const std::vector<double> s_values = {0.6, 0.75, 0.9};
    const std::vector<double> c_values = {2.0, 10.0, 100.0};
    const std::vector<double> xi = log_spaced(1e-3, 1e6, 500);
    double r0 = 0.0, r1 = 0.0;
    for (double s : s_values) {
        for (double c : c_values) {
            const SymbolParams p = SymbolParams::make_normalized(s, c);
            for (double x : xi) {
                const double env = decay_envelope(x, p);
                r0 = std::max(r0, std::abs(inverse_diff(x, p)) / env);
                r1 = std::max(r1, std::abs(inverse_diff_derivative(x, p)) * x / env);
            }
        }
    }
    return DecayConstants{1.05 * r0, 1.05 * r1};
}

SymbolSweep run_symbol_sweep(const std::vector<double>& s_values, const std::vector<double>& c_values,
                             double xi_min, double xi_max, std::size_t samples,
                             const DecayConstants& constants, double rel_tol) {
    if (!(xi_min > 0.0 && xi_max > xi_min))
        throw InvalidParams("sweep needs 0 < xi_min < xi_max");
    SymbolSweep sweep;
    sweep.constants = constants;
    const std::vector<double> xi = log_spaced(xi_min, xi_max, samples);
    sweep.rows.reserve(s_values.size() * c_values.size() * samples);
    for (double s : s_values) {
        for (double c : c_values) {
            const SymbolParams p = SymbolParams::make_normalized(s, c);
            const double xs = crossover_frequency(p);
            for (double x : xi) {
                SweepRow row{};
                row.s = s;
                row.c = c;
                row.xi = x;
                row.p_c = pseudorel_symbol(x, p);
                row.p_inf = limit_symbol(x);
                const DiffEntry de = diff_entry(x, p, rel_tol);
                row.diff = de.diff;
                row.diff_bound = de.bound;
                sweep.diff.add(x, de.slack, de.ok);

                row.low_ok = true;
                row.high_ok = true;
                if (x <= xs) {
                    const BracketEntry e = low_bracket_entry(x, p, rel_tol);
                    row.low_ok = e.ok;
                    sweep.low.add(x, e.slack, e.ok);
                }
                if (x >= xs) {
                    const BracketEntry e = high_bracket_entry(x, p, rel_tol);
                    row.high_ok = e.ok;
                    sweep.high.add(x, e.slack, e.ok);
                }

                const DecayEntry d0 = decay_entry(x, p, 0, constants, rel_tol);
                row.decay0_ok = d0.ok;
                sweep.decay0.add(x, d0.slack, d0.ok);
                const DecayEntry d1 = decay_entry(x, p, 1, constants, rel_tol);
                row.decay1_ok = d1.ok;
                sweep.decay1.add(x, d1.slack, d1.ok);

                sweep.rows.push_back(row);
            }
        }
    }
    return sweep;
}

} // namespace relspec
