#pragma once

#include <functional>
#include <memory>
#include <optional>

#include <Eigen/Dense>

#include "relspec/groundstate.hpp"
#include "relspec/norms.hpp"
#include "relspec/rng.hpp"
#include "relspec/symbol.hpp"
#include "relspec/transform.hpp"

namespace relspec {

// --- multiplier actions -----------------------------------------------------

RadialField apply_pseudorel(const RadialField& f, const SymbolParams& params);
RadialField apply_limit(const RadialField& f);
RadialField apply_pseudorel_inverse(const RadialField& f, const SymbolParams& params);
RadialField apply_limit_inverse(const RadialField& f);

/// The difference operator (limit - pseudorel), applied through the
/// cancellation-free difference symbol rather than by subtracting the two
/// multiplier actions.
RadialField apply_symbol_diff(const RadialField& f, const SymbolParams& params);

/// Multiplier with symbol 1/limit - 1/pseudorel (stable form).
RadialField apply_inverse_diff(const RadialField& f, const SymbolParams& params);

// --- generic operator handle -------------------------------------------------

struct LinearOperatorHandle {
    enum class Kind { multiplier, composed, dense };
    Kind kind = Kind::multiplier;
    GridPtr grid;
    std::optional<SymbolParams> params;
    std::function<RadialField(const RadialField&)> apply;
};

LinearOperatorHandle multiplier_handle(const GridPtr& grid, std::function<double(double)> symbol);
LinearOperatorHandle pseudorel_handle(const GridPtr& grid, const SymbolParams& params);
LinearOperatorHandle limit_handle(const GridPtr& grid);

// --- dense core factor --------------------------------------------------------

/// I - p u^{p-1} (-Delta+1)^{-1} at the ground state: the c-independent,
/// identity-plus-compact factor of the linearized operator.  Assembled dense
/// column by column and LU-factorized once; the factorization is reused by
/// every c in a study.
class FredholmFactor {
public:
    explicit FredholmFactor(const GroundState& state, bool retain_matrix = false);

    const GridPtr& grid() const { return grid_; }
    double p() const { return p_; }
    /// multiplication weight p u^{p-1}
    const RadialField& weight() const { return weight_; }

    RadialField apply(const RadialField& f) const;
    RadialField solve(const RadialField& f) const;

    /// matrix dimension: K + 1 for dim 1 (origin coordinate included), K for dim 3
    std::size_t augmented_size() const;

    /// present only when retain_matrix was requested
    const Eigen::MatrixXd* matrix() const { return retained_.get(); }

    LinearOperatorHandle handle() const;

private:
    GridPtr grid_;
    double p_;
    RadialField weight_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::shared_ptr<Eigen::MatrixXd> retained_;
};

// --- factorized linearized operator -------------------------------------------

/// Perturbation p u^{p-1} (limit^{-1} - pseudorel^{-1}) core^{-1}; its size
/// controls the Neumann series below and vanishes as c grows.
RadialField apply_perturbation(const RadialField& f, const SymbolParams& params, const FredholmFactor& core);

/// Forward linearized operator pseudorel - p u^{p-1}.
RadialField apply_linearized(const RadialField& f, const SymbolParams& params, const FredholmFactor& core);

struct NeumannStats {
    int terms = 0;
    double last_term_norm = 0.0;
};

inline constexpr double kNeumannRelTol = 1e-14;
inline constexpr int kNeumannMaxTerms = 50;

/// pseudorel^{-1} core^{-1} (I + perturbation)^{-1} f, the middle inverse by
/// the Neumann series truncated at relative 1e-14; throws NeumannDivergence
/// when 50 terms fail to reach that (c below threshold).
RadialField apply_linearized_inverse(const RadialField& f, const SymbolParams& params,
                                     const FredholmFactor& core, NeumannStats* stats = nullptr);

/// Dominant-eigenvalue magnitude of the perturbation by power iteration
/// (geometric mean of the trailing growth factors); this is the quantity
/// that governs the Neumann series.
double perturbation_norm_probe(const SymbolParams& params, const FredholmFactor& core, DetRng& rng,
                               int iterations = 60);

// --- operator-norm probes -------------------------------------------------------

struct NormEquivalenceProbe {
    double min_first = 0.0;   // ||P f||_q / ||f||_{W^{1,q}}
    double max_first = 0.0;
    double min_second = 0.0;  // ||P f||_q / ||f||_{W^{2,q}}
    double max_second = 0.0;
};

NormEquivalenceProbe norm_equivalence_probe(const SymbolParams& params, const GridPtr& grid, double q,
                                            int trials, DetRng& rng);

/// Calibrated constants for the two inverse-difference operator contracts
/// ||a(D) f||_q <= C_plain c^{-2s/(1-s)} ||f||_q and
/// ||a(D) f||_q <= C_smoothing c^{-2s^2/(1-s)} ||limit^{-(1-s)} f||_q.
struct OperatorDecayConstants {
    double plain = 0.0;
    double smoothing = 0.0;
};

OperatorDecayConstants calibrate_operator_decay(const GridPtr& grid, double s, double q);

struct OperatorDecayCheck {
    double worst_plain = 0.0;      // max observed ratio / constant
    double worst_smoothing = 0.0;
    bool ok = false;
};

OperatorDecayCheck check_operator_decay(const GridPtr& grid, double s, double q,
                                        const OperatorDecayConstants& constants, DetRng& rng, int trials);

} // namespace relspec
