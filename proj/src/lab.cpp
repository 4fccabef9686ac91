#include "relspec/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <future>
#include <sstream>

#include "relspec/field_io.hpp"
#include "relspec/groundstate.hpp"

namespace relspec {

using nlohmann::json;

namespace {

void validate_study_config(const RateStudyConfig& config) {
    if (config.c_values.size() < 4)
        throw InsufficientLadder("rate study needs at least 4 c values");
    for (std::size_t i = 0; i + 1 < config.c_values.size(); ++i)
        if (!(config.c_values[i] < config.c_values[i + 1]))
            throw InvalidParams("c ladder must be strictly increasing");
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

RateStudy run_rate_study(const RateStudyConfig& config) {
    validate_study_config(config);

    RateStudy study;
    study.config = config;
    const GridPtr grid = make_grid(config.dim, config.points, config.radius);
    const GroundState state =
        config.dim == 1 ? closed_form_1d(config.p, grid) : petviashvili(config.p, grid);
    const FredholmFactor core(state);

    const double h1 = norms(state.field, config.q).h1;
    study.delta_used = config.delta > 0.0 ? config.delta : std::min(0.5, h1 / 2.0);

    auto solve_one = [&](double c) -> RateEntry {
        RateEntry entry;
        entry.c = c;
        SolveConfig solve_config;
        solve_config.params = SymbolParams::make_normalized(config.s, c);
        solve_config.p = config.p;
        solve_config.q = config.q;
        solve_config.delta = study.delta_used;
        solve_config.tol = config.tol;
        solve_config.max_iter = config.max_iter;
        solve_config.seed = config.seed;
        try {
            const SolveReport report = solve(solve_config, state, core);
            entry.converged = true;
            entry.norm_h1 = report.w_norms.h1;
            entry.norm_w1q = report.w_norms.w1q;
            entry.norm_max = report.w_norms.intersection;
            entry.iters = report.iterations;
            entry.residual = report.residual;
        } catch (const NoContraction&) {
            entry.converged = false;
        }
        return entry;
    };

    std::vector<std::future<RateEntry>> futures;
    futures.reserve(config.c_values.size());
    for (double c : config.c_values)
        futures.push_back(std::async(std::launch::async, solve_one, c));
    for (auto& f : futures)
        study.entries.push_back(f.get());

    std::size_t converged = 0;
    for (const RateEntry& e : study.entries) {
        if (e.converged)
            ++converged;
        else
            study.excluded_c.push_back(e.c);
    }
    if (converged < 4)
        throw InsufficientLadder("fewer than 4 ladder entries converged");

    // ordinary least squares on (log c, log norm)
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (const RateEntry& e : study.entries) {
        if (!e.converged) continue;
        const double x = std::log(e.c), y = std::log(e.norm_max);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1;
    }
    study.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    const double s = config.s;
    study.expected_exponent =
        config.p <= 2.0 ? -2.0 * s * s / (1.0 - s) : -2.0 * s / (1.0 - s);
    if (config.p > 2.0) {
        const double target = 2.0 * s / (1.0 - s);
        study.pass = std::abs(study.fitted_slope + target) <= 0.15 * target;
    } else {
        study.pass = study.fitted_slope <= study.expected_exponent + 0.5;
    }
    return study;
}

json study_to_json(const RateStudy& study) {
    json entries = json::array();
    for (const RateEntry& e : study.entries)
        entries.push_back({{"c", e.c},
                           {"converged", e.converged},
                           {"norm_h1", e.norm_h1},
                           {"norm_w1q", e.norm_w1q},
                           {"norm_max", e.norm_max},
                           {"iters", e.iters},
                           {"residual", e.residual}});
    return json{{"config", manifest_to_json(RunManifest{"relspec", kToolVersion, "", study.config, {}}).at("config")},
                {"delta_used", study.delta_used},
                {"entries", entries},
                {"excluded_c", study.excluded_c},
                {"fitted_slope", study.fitted_slope},
                {"expected_exponent", study.expected_exponent},
                {"pass", study.pass}};
}

std::string study_to_csv(const RateStudy& study) {
    std::ostringstream out;
    out << "c,s,p,N,q,norm_h1,norm_w1q,norm_max,iters,residual,converged\n";
    for (const RateEntry& e : study.entries) {
        out << fmt17(e.c) << ',' << fmt17(study.config.s) << ',' << fmt17(study.config.p) << ','
            << study.config.dim << ',' << fmt17(study.config.q) << ',' << fmt17(e.norm_h1) << ','
            << fmt17(e.norm_w1q) << ',' << fmt17(e.norm_max) << ',' << e.iters << ','
            << fmt17(e.residual) << ',' << (e.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

json manifest_to_json(const RunManifest& manifest) {
    return json{{"tool", manifest.tool},
                {"version", manifest.version},
                {"created_utc", manifest.created_utc},
                {"config",
                 {{"dim", manifest.config.dim},
                  {"K", manifest.config.points},
                  {"R", manifest.config.radius},
                  {"s", manifest.config.s},
                  {"p", manifest.config.p},
                  {"q", manifest.config.q},
                  {"tol", manifest.config.tol},
                  {"max_iter", manifest.config.max_iter},
                  {"delta", manifest.config.delta},
                  {"auto_c0", manifest.config.auto_c0},
                  {"seed", manifest.config.seed},
                  {"c_values", manifest.config.c_values}}},
                {"calibration",
                 {{"decay_c0", manifest.calibration.symbol.c0},
                  {"decay_c1", manifest.calibration.symbol.c1},
                  {"op_plain", manifest.calibration.op.plain},
                  {"op_smoothing", manifest.calibration.op.smoothing}}}};
}

RateStudyConfig study_config_from_json(const json& j) {
    RateStudyConfig config;
    config.dim = j.at("dim").get<int>();
    config.points = j.at("K").get<std::size_t>();
    config.radius = j.at("R").get<double>();
    config.s = j.at("s").get<double>();
    config.p = j.at("p").get<double>();
    config.q = j.value("q", 4.0);
    config.tol = j.value("tol", 1e-12);
    config.max_iter = j.value("max_iter", 200);
    config.delta = j.value("delta", 0.0);
    config.auto_c0 = j.value("auto_c0", false);
    config.seed = j.value("seed", kDefaultSeed);
    config.c_values = j.at("c_values").get<std::vector<double>>();
    return config;
}

RunManifest manifest_from_json(const json& j) {
    RunManifest manifest;
    manifest.tool = j.value("tool", "relspec");
    manifest.version = j.value("version", kToolVersion);
    manifest.created_utc = j.value("created_utc", "");
    manifest.config = study_config_from_json(j.at("config"));
    if (j.contains("calibration")) {
        const json& c = j.at("calibration");
        manifest.calibration.symbol.c0 = c.value("decay_c0", 0.0);
        manifest.calibration.symbol.c1 = c.value("decay_c1", 0.0);
        manifest.calibration.op.plain = c.value("op_plain", 0.0);
        manifest.calibration.op.smoothing = c.value("op_smoothing", 0.0);
    }
    return manifest;
}

RunManifest make_manifest(const RateStudyConfig& config) {
    RunManifest manifest;
    manifest.created_utc = utc_timestamp();
    manifest.config = config;
    manifest.calibration.symbol = calibrate_decay_constants();
    manifest.calibration.op = calibrate_operator_decay(make_grid(config.dim, config.points, config.radius),
                                                       config.s, config.q);
    return manifest;
}

void emit(const RateStudy& study, const std::string& prefix) {
    write_text_file(prefix + ".csv", study_to_csv(study));
    write_text_file(prefix + ".json", study_to_json(study).dump(2) + "\n");
    write_text_file(prefix + ".manifest.json", manifest_to_json(make_manifest(study.config)).dump(2) + "\n");
}

RateStudy replay(const RunManifest& manifest) {
    return run_rate_study(manifest.config);
}

} // namespace relspec
