// relspec command-line driver: symbol sweeps, ground states, contraction
// solves, rate studies, and the identity checks.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relspec/field_io.hpp"
#include "relspec/groundstate.hpp"
#include "relspec/identities.hpp"
#include "relspec/lab.hpp"

namespace {

using namespace relspec;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int cmd_symbols_check(const std::vector<double>& s_list, const std::vector<double>& c_list, double xi_min,
                      double xi_max, std::size_t samples, const std::string& out_path) {
    const DecayConstants constants = calibrate_decay_constants();
    const SymbolSweep sweep = run_symbol_sweep(s_list, c_list, xi_min, xi_max, samples, constants);

    std::ostringstream csv;
    csv << "s,c,xi,p_c,p_inf,diff,diff_bound,low_ok,high_ok,decay0_ok,decay1_ok\n";
    for (const SweepRow& row : sweep.rows) {
        csv << fmt17(row.s) << ',' << fmt17(row.c) << ',' << fmt17(row.xi) << ',' << fmt17(row.p_c) << ','
            << fmt17(row.p_inf) << ',' << fmt17(row.diff) << ',' << fmt17(row.diff_bound) << ','
            << row.low_ok << ',' << row.high_ok << ',' << row.decay0_ok << ',' << row.decay1_ok << '\n';
    }
    write_text_file(out_path, csv.str());

    auto line = [](const char* name, const BoundReport& r) {
        std::printf("%-12s samples=%zu violations=%zu worst_slack=%.3e at xi=%.6g\n", name, r.samples,
                    r.violations, r.worst_slack, r.worst_xi);
    };
    std::printf("calibrated decay constants: C0=%.6g C1=%.6g\n", constants.c0, constants.c1);
    line("low", sweep.low);
    line("high", sweep.high);
    line("diff", sweep.diff);
    line("decay0", sweep.decay0);
    line("decay1", sweep.decay1);
    std::printf("%s\n", sweep.clean() ? "all symbol bounds hold" : "BOUND VIOLATIONS PRESENT");
    return sweep.clean() ? 0 : 1;
}

int cmd_groundstate(int dim, double p, std::size_t K, double R, double tol, const std::string& out_path) {
    const GridPtr grid = make_grid(dim, K, R);
    const GroundState state = petviashvili(p, grid, tol);
    write_text_file(out_path, field_to_json(state.field).dump(2) + "\n");
    std::printf("residual=%.17g\n", state.residual);
    return 0;
}

int cmd_solve(int dim, double p, double s, double c, double q, double delta, std::size_t K, double R,
              double tol, bool auto_c0, const std::string& out_path) {
    const GridPtr grid = make_grid(dim, K, R);
    const GroundState state = dim == 1 ? closed_form_1d(p, grid) : petviashvili(p, grid);
    const FredholmFactor core(state);

    SolveConfig config;
    config.params = SymbolParams::make_normalized(s, c);
    config.p = p;
    config.q = q;
    config.delta = delta > 0.0 ? delta : std::min(0.5, norms(state.field, q).h1 / 2.0);
    config.tol = tol;
    config.probe_lipschitz = true;

    for (;;) {
        try {
            const SolveReport report = solve(config, state, core);
            write_text_file(out_path, report_to_json(config, report).dump(2) + "\n");
            std::printf("c=%.17g iterations=%d residual=%.17g |w|=%.17g lipschitz=%.3f\n", config.params.c,
                        report.iterations, report.residual, report.w_norms.intersection,
                        report.lipschitz_probe);
            return 0;
        } catch (const NoContraction& e) {
            if (!auto_c0) {
                std::fprintf(stderr, "NoContraction: %s\n", e.what());
                return 2;
            }
            std::fprintf(stderr, "c=%.6g: %s; retrying at c*1.5\n", config.params.c, e.what());
            config.params = SymbolParams::make_normalized(s, config.params.c * 1.5);
        }
    }
}

int cmd_rates(RateStudyConfig config, const std::string& prefix) {
    const RateStudy study = run_rate_study(config);
    emit(study, prefix);
    std::printf("fitted_slope=%.6g expected_exponent=%.6g pass=%d excluded=%zu\n", study.fitted_slope,
                study.expected_exponent, study.pass ? 1 : 0, study.excluded_c.size());
    return study.pass ? 0 : 1;
}

int cmd_pohozaev(const std::string& input_path) {
    const nlohmann::json j = read_json_file(input_path);
    const SolveConfig config = config_from_json(j.at("config"));
    const RadialField u = field_from_json(j.at("u_c"));
    const double value = pohozaev_functional(u, config.p, config.params);
    const double h1 = norms(u, config.q).h1;
    std::printf("pohozaev=%.17g relative=%.17g\n", value, std::abs(value) / (h1 * h1));
    return 0;
}

int cmd_classify(int dim, double s, double p, double m, double mu, double c) {
    const SymbolParams params =
        m > 0.0 ? SymbolParams::make_general(s, c, m, mu) : SymbolParams::make_normalized(s, c);
    const ExistenceRegime regime = classify_existence(p, params, dim);
    const double obstruction = 1.0 / (p + 1.0) - (dim - 2.0 * s) / (2.0 * dim);
    std::printf("regime=%s kappa=%.17g obstruction=%.17g\n", to_string(regime), params.kappa(), obstruction);
    return 0;
}

// config-file support for `rates`: JSON mirroring the flags, flag wins
void merge_rates_config(const CLI::App* cmd, RateStudyConfig& config, const std::string& config_path) {
    if (config_path.empty()) return;
    const nlohmann::json j = read_json_file(config_path);
    auto absent = [&](const std::string& flag) { return cmd->get_option(flag)->count() == 0; };
    if (j.contains("dim") && absent("--dim")) config.dim = j["dim"].get<int>();
    if (j.contains("K") && absent("--K")) config.points = j["K"].get<std::size_t>();
    if (j.contains("R") && absent("--R")) config.radius = j["R"].get<double>();
    if (j.contains("s") && absent("--s")) config.s = j["s"].get<double>();
    if (j.contains("p") && absent("--p")) config.p = j["p"].get<double>();
    if (j.contains("q") && absent("--q")) config.q = j["q"].get<double>();
    if (j.contains("tol") && absent("--tol")) config.tol = j["tol"].get<double>();
    if (j.contains("auto_c0") && absent("--auto-c0")) config.auto_c0 = j["auto_c0"].get<bool>();
    if (j.contains("c_values") && absent("--c-list"))
        config.c_values = j["c_values"].get<std::vector<double>>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial spectral solver for the pseudorelativistic equation"};
    app.require_subcommand(1);

    // symbols check
    auto* symbols = app.add_subcommand("symbols", "symbol-level bound verification");
    symbols->require_subcommand(1);
    auto* check = symbols->add_subcommand("check", "sweep the symbol bounds and write a CSV");
    std::vector<double> s_list{0.6, 0.75, 0.9};
    std::vector<double> c_list{2.0, 10.0, 100.0};
    double xi_min = 1e-3, xi_max = 1e6;
    std::size_t sweep_samples = 2000;
    std::string sweep_out = "symbols.csv";
    check->add_option("--s", s_list, "fractional orders");
    check->add_option("--c", c_list, "speed parameters");
    check->add_option("--xi-min", xi_min, "lowest frequency");
    check->add_option("--xi-max", xi_max, "highest frequency");
    check->add_option("--samples", sweep_samples, "log-spaced sample count");
    check->add_option("--out", sweep_out, "CSV output path");

    // groundstate
    auto* gs = app.add_subcommand("groundstate", "limit-equation ground state");
    int gs_dim = 1;
    double gs_p = 3.0, gs_R = 40.0, gs_tol = 1e-13;
    std::size_t gs_K = 4096;
    std::string gs_out = "field.json";
    gs->add_option("--dim", gs_dim)->check(CLI::IsMember({1, 3}));
    gs->add_option("--p", gs_p);
    gs->add_option("--K", gs_K);
    gs->add_option("--R", gs_R);
    gs->add_option("--tol", gs_tol);
    gs->add_option("--out", gs_out);

    // solve
    auto* sv = app.add_subcommand("solve", "contraction solve at one c");
    int sv_dim = 1;
    double sv_p = 3.0, sv_s = 0.75, sv_c = 8.0, sv_q = 4.0, sv_delta = 0.0, sv_R = 40.0, sv_tol = 1e-12;
    std::size_t sv_K = 4096;
    bool sv_auto = false;
    std::string sv_out = "report.json";
    sv->add_option("--dim", sv_dim)->check(CLI::IsMember({1, 3}));
    sv->add_option("--p", sv_p);
    sv->add_option("--s", sv_s);
    sv->add_option("--c", sv_c);
    sv->add_option("--q", sv_q);
    sv->add_option("--delta", sv_delta);
    sv->add_option("--K", sv_K);
    sv->add_option("--R", sv_R);
    sv->add_option("--tol", sv_tol);
    sv->add_flag("--auto-c0", sv_auto);
    sv->add_option("--out", sv_out);

    // rates
    auto* rt = app.add_subcommand("rates", "convergence-rate study over a c ladder");
    RateStudyConfig rt_config;
    std::string rt_prefix = "rates";
    std::string rt_config_path;
    rt->add_option("--dim", rt_config.dim)->check(CLI::IsMember({1, 3}));
    rt->add_option("--p", rt_config.p);
    rt->add_option("--s", rt_config.s);
    rt->add_option("--q", rt_config.q);
    rt->add_option("--K", rt_config.points);
    rt->add_option("--R", rt_config.radius);
    rt->add_option("--tol", rt_config.tol);
    rt->add_option("--c-list", rt_config.c_values, "ascending c ladder")->delimiter(',');
    rt->add_flag("--auto-c0", rt_config.auto_c0);
    rt->add_option("--out", rt_prefix, "output prefix");
    rt->add_option("--config", rt_config_path, "JSON config mirroring the flags (flag wins)");

    // pohozaev
    auto* ph = app.add_subcommand("pohozaev", "virial identity on a solve report");
    std::string ph_input = "report.json";
    ph->add_option("--input", ph_input);

    // classify
    auto* cl = app.add_subcommand("classify", "existence regime of (s, p, m, mu, c)");
    int cl_dim = 3;
    double cl_s = 0.75, cl_p = 3.0, cl_m = 0.0, cl_mu = 1.0, cl_c = 2.0;
    cl->add_option("--dim", cl_dim);
    cl->add_option("--s", cl_s);
    cl->add_option("--p", cl_p);
    cl->add_option("--m", cl_m, "mass; omit for the normalized form");
    cl->add_option("--mu", cl_mu);
    cl->add_option("--c", cl_c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_symbols_check(s_list, c_list, xi_min, xi_max, sweep_samples, sweep_out);
        if (gs->parsed())
            return cmd_groundstate(gs_dim, gs_p, gs_K, gs_R, gs_tol, gs_out);
        if (sv->parsed())
            return cmd_solve(sv_dim, sv_p, sv_s, sv_c, sv_q, sv_delta, sv_K, sv_R, sv_tol, sv_auto, sv_out);
        if (rt->parsed()) {
            merge_rates_config(rt, rt_config, rt_config_path);
            return cmd_rates(rt_config, rt_prefix);
        }
        if (ph->parsed())
            return cmd_pohozaev(ph_input);
        if (cl->parsed())
            return cmd_classify(cl_dim, cl_s, cl_p, cl_m, cl_mu, cl_c);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
