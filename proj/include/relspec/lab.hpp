#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "relspec/solver.hpp"

namespace relspec {

inline constexpr const char* kToolVersion = "1.0.0";

struct RateStudyConfig {
    int dim = 1;
    std::size_t points = 4096;
    double radius = 40.0;
    double s = 0.75;
    double p = 3.0;
    double q = 4.0;
    double tol = 1e-12;
    int max_iter = 200;
    double delta = 0.0;  // 0 selects min(0.5, ||u_inf||_H1 / 2)
    bool auto_c0 = false;
    std::uint64_t seed = kDefaultSeed;
    std::vector<double> c_values;
};

struct RateEntry {
    double c = 0.0;
    bool converged = false;
    double norm_h1 = 0.0;
    double norm_w1q = 0.0;
    double norm_max = 0.0;  // intersection norm of u_c - u_inf
    int iters = 0;
    double residual = 0.0;
};

struct RateStudy {
    RateStudyConfig config;
    double delta_used = 0.0;
    std::vector<RateEntry> entries;
    std::vector<double> excluded_c;
    double fitted_slope = 0.0;
    double expected_exponent = 0.0;  // -2s^2/(1-s) if p <= 2, else -2s/(1-s)
    bool pass = false;
};

/// Calibration constants recorded with every run.
struct CalibrationRecord {
    DecayConstants symbol;
    OperatorDecayConstants op;
};

struct RunManifest {
    std::string tool = "relspec";
    std::string version = kToolVersion;
    std::string created_utc;
    RateStudyConfig config;
    CalibrationRecord calibration;
};

/// Solves the ladder (concurrently over c), measures the intersection-norm
/// distance to the ground state per c, fits the log-log slope by ordinary
/// least squares, and applies the rate verdict:
///   p > 2: |slope + 2s/(1-s)| <= 0.15 * 2s/(1-s)
///   p <= 2: slope <= -2s^2/(1-s) + 0.5  (upper-bound semantics)
/// Ladder entries that fail to converge are excluded and recorded; fewer
/// than 4 surviving entries raises InsufficientLadder.
RateStudy run_rate_study(const RateStudyConfig& config);

nlohmann::json study_to_json(const RateStudy& study);
std::string study_to_csv(const RateStudy& study);

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);
RateStudyConfig study_config_from_json(const nlohmann::json& j);

RunManifest make_manifest(const RateStudyConfig& config);

/// Writes <prefix>.csv, <prefix>.json and <prefix>.manifest.json.
void emit(const RateStudy& study, const std::string& prefix);

/// Re-runs the study recorded in a manifest; the result must reproduce the
/// original norms to 1e-12 relative in a fixed floating-point environment.
RateStudy replay(const RunManifest& manifest);

} // namespace relspec
