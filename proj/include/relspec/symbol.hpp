#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "relspec/errors.hpp"

namespace relspec {

/// Parameter tuple of the pseudorelativistic symbol.
///
/// The normalized form fixes m = s^{1/(2-2s)} and mu = 1, which makes the
/// quadratic Taylor coefficient of the symbol at xi = 0 equal to one and
/// lets the large constants cancel exactly.  General (m, mu) are kept for
/// the scaling/identity layer; the bound-verification routines require the
/// normalized form.
struct SymbolParams {
    double s = 0.75;        // fractional order, in (1/2, 1)
    double c = 2.0;         // light-speed parameter, > 0
    double m = 0.0;         // mass (general form only)
    double mu = 1.0;        // frequency shift (general form only)
    bool normalized = true;

    static SymbolParams make_normalized(double s, double c);
    static SymbolParams make_general(double s, double c, double m, double mu);

    double mass() const;    // effective m (s^{1/(2-2s)} when normalized)
    double a2() const;      // m^2 c^{2/(1-s)}
    double a2s() const;     // m^{2s} c^{2s/(1-s)} = (a2)^s
    double b2() const;      // c^2
    double kappa() const;   // mu - a2s
};

// --- pointwise symbol evaluation -------------------------------------------

/// Limit symbol xi^2 + 1.
double limit_symbol(double xi);

/// Pseudorelativistic symbol (c^2 xi^2 + a^2)^s - a^{2s} + mu, evaluated in
/// the cancellation-free form a^{2s} * expm1(s * log1p(b^2 xi^2 / a^2)) + mu.
double pseudorel_symbol(double xi, const SymbolParams& params);

/// d/dxi of the pseudorelativistic symbol (normalized form).
double pseudorel_symbol_derivative(double xi, const SymbolParams& params);

/// Regime boundary of the two-sided symbol brackets:
/// c^{s/(1-s)} * sqrt((2^{1/(1-s)} - 1) * s^{1/(1-s)}).
double crossover_frequency(const SymbolParams& params);

/// Signed difference pseudorel_symbol - limit_symbol, computed through the
/// remainder a^{2s} * ((1+t)^s - 1 - s t) so that no large terms are
/// subtracted in floating point.  Normalized form only.
double symbol_diff(double xi, const SymbolParams& params);

/// Quartic envelope (s(1-s) / (2 s^{(2-s)/(1-s)})) * xi^4 / c^{2s/(1-s)}
/// dominating |symbol_diff|.
double symbol_diff_bound(double xi, const SymbolParams& params);

/// Inverse-symbol difference 1/limit_symbol - 1/pseudorel_symbol.
double inverse_diff(double xi, const SymbolParams& params);

/// d/dxi of inverse_diff, assembled from the closed-form derivatives of the
/// two symbols (cancellation-free).
double inverse_diff_derivative(double xi, const SymbolParams& params);

/// min{ c^{-2s/(1-s)}, c^{-2s^2/(1-s)} (xi^2+1)^{-(1-s)} }.
double decay_envelope(double xi, const SymbolParams& params);

// --- pointwise bound checks -------------------------------------------------

struct BracketEntry {
    double xi = 0.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double slack = 0.0;     // min(value-lower, upper-value) / scale
    bool ok = true;
};

struct DiffEntry {
    double xi = 0.0;
    double diff = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool ok = true;
};

struct DecayEntry {
    double xi = 0.0;
    double quantity = 0.0;  // |a(xi)| (order 0) or |a'(xi)| (order 1)
    double bound = 0.0;
    double ratio_ok = true; // order 0 only: P_c/P_inf <= 1
    double slack = 0.0;
    bool ok = true;
};

/// Calibrated prefactors for the inverse-symbol decay estimates.  The
/// calibration sweep is fixed (s in {0.6, 0.75, 0.9}, c in {2, 10, 100},
/// 500 log-spaced xi in [1e-3, 1e6]); the constants are 1.05 times the
/// largest observed quantity/envelope ratio and are recorded in every run
/// manifest.
struct DecayConstants {
    double c0 = 0.0;
    double c1 = 0.0;
};

DecayConstants calibrate_decay_constants();

inline constexpr double kBoundRelTol = 1e-12;

/// (xi^2+1)/2 <= P_c(xi) <= xi^2 + 1 on [0, crossover].
BracketEntry low_bracket_entry(double xi, const SymbolParams& params, double rel_tol = kBoundRelTol);
/// K_s c^{2s} xi^{2s} + 1 <= P_c(xi) <= c^{2s} xi^{2s} + 1 beyond the crossover.
BracketEntry high_bracket_entry(double xi, const SymbolParams& params, double rel_tol = kBoundRelTol);
/// |symbol_diff| <= symbol_diff_bound.
DiffEntry diff_entry(double xi, const SymbolParams& params, double rel_tol = kBoundRelTol);
/// Order 0: |inverse_diff| <= C0 * envelope and P_c/P_inf <= 1.
/// Order 1: |inverse_diff_derivative| <= C1/xi * envelope.
DecayEntry decay_entry(double xi, const SymbolParams& params, int order, const DecayConstants& constants,
                       double rel_tol = kBoundRelTol);

// Throwing forms of the above; BoundViolation carries (xi, value, bounds).
void check_low_bracket(double xi, const SymbolParams& params);
void check_high_bracket(double xi, const SymbolParams& params);
DiffEntry diff_and_bound(double xi, const SymbolParams& params);
void check_multiplier_decay(double xi, const SymbolParams& params, int order, const DecayConstants& constants);

// --- sweeps -----------------------------------------------------------------

struct BoundReport {
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_xi = std::numeric_limits<double>::quiet_NaN();

    void add(double xi, double slack, bool ok);
};

struct SweepRow {
    double s, c, xi;
    double p_c, p_inf, diff, diff_bound;
    bool low_ok, high_ok, decay0_ok, decay1_ok;
};

struct SymbolSweep {
    std::vector<SweepRow> rows;
    BoundReport low;       // Eq.-(10)-type bracket, upper bound per its proof line
    BoundReport high;      // high-frequency bracket
    BoundReport diff;      // quartic difference envelope
    BoundReport decay0;    // order-0 inverse-symbol decay + ratio
    BoundReport decay1;    // order-1 inverse-symbol decay
    DecayConstants constants;

    bool clean() const {
        return low.violations == 0 && high.violations == 0 && diff.violations == 0 &&
               decay0.violations == 0 && decay1.violations == 0;
    }
};

/// Log-spaced sweep over every (s, c, xi) triple; each point is checked
/// against the bracket applicable to its regime plus the difference and
/// decay envelopes.
SymbolSweep run_symbol_sweep(const std::vector<double>& s_values, const std::vector<double>& c_values,
                             double xi_min, double xi_max, std::size_t samples,
                             const DecayConstants& constants, double rel_tol = kBoundRelTol);

} // namespace relspec
