#pragma once

#include <cstdint>
#include <vector>

#include "relspec/operators.hpp"

namespace relspec {

inline constexpr std::uint64_t kDefaultSeed = 0x2545f4914f6cdd1dULL;

struct SolveConfig {
    SymbolParams params;
    double p = 3.0;
    double q = 4.0;          // Lebesgue index, must exceed the dimension
    double delta = 0.5;      // contraction ball radius in H1 cap W^{1,q}
    double tol = 1e-12;      // fixed-point L2 step tolerance
    int max_iter = 200;
    bool probe_lipschitz = false;
    std::uint64_t seed = kDefaultSeed;
};

struct IterationRecord {
    int iter = 0;
    double step_l2 = 0.0;
    double w_intersection = 0.0;
};

struct SolveReport {
    RadialField w;          // fixed point of the contraction
    RadialField u_c;        // ground state + w
    int iterations = 0;
    double final_step = 0.0;
    double residual = 0.0;  // ||pseudorel(u_c) - |u_c|^{p-1} u_c||_2 / ||u_c||_2
    double lipschitz_probe = 0.0;
    double forcing_norm = 0.0;
    NormSet w_norms;
    std::vector<IterationRecord> trace;
};

/// Quadratic remainder |w+u|^{p-1}(w+u) - u^p - p u^{p-1} w of the
/// nonlinearity around the ground state.
RadialField nonlinear_remainder(const RadialField& w, const GroundState& state);

struct ForcingTerm {
    RadialField field;
    NormSet norms;
};

/// linearized^{-1} (limit - pseudorel) u_inf and its intersection norm.
ForcingTerm forcing_term(const SymbolParams& params, const GroundState& state, const FredholmFactor& core,
                         double q);

/// One application of the contraction map: forcing + linearized^{-1} Q(w).
/// Throws BallExit when the image leaves the delta-ball.
RadialField fixed_point_map(const RadialField& w, const SolveConfig& config, const GroundState& state,
                            const FredholmFactor& core, const ForcingTerm& forcing);

/// Iterates the contraction map from w = 0 until the L2 step drops below
/// tol; verifies the solution by the equation residual.  BallExit,
/// non-decreasing steps, iteration exhaustion, and Neumann divergence all
/// surface as NoContraction ("raise c").
SolveReport solve(const SolveConfig& config, const GroundState& state, const FredholmFactor& core);

/// Walks c upward by factors of 1.5 from config.params.c until the solve
/// succeeds with the perturbation's dominant eigenvalue at most 1/2; returns
/// that c.
double discover_c0(SolveConfig config, const GroundState& state, const FredholmFactor& core,
                   int max_steps = 30);

} // namespace relspec
