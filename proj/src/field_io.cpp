#include "relspec/field_io.hpp"

#include <fstream>
#include <sstream>

namespace relspec {

using nlohmann::json;

json field_to_json(const RadialField& u) {
    return json{{"dim", u.grid->dim()},
                {"K", u.grid->points()},
                {"R", u.grid->radius()},
                {"values", u.values}};
}

RadialField field_from_json(const json& j) {
    const GridPtr grid = make_grid(j.at("dim").get<int>(), j.at("K").get<std::size_t>(),
                                   j.at("R").get<double>());
    RadialField u(grid);
    const auto& vals = j.at("values");
    if (vals.size() != grid->points())
        throw InvalidParams("field value count does not match K");
    for (std::size_t i = 0; i < u.values.size(); ++i)
        u.values[i] = vals.at(i).get<double>();
    return u;
}

json config_to_json(const SolveConfig& config) {
    json j{{"s", config.params.s}, {"c", config.params.c},      {"normalized", config.params.normalized},
           {"p", config.p},        {"q", config.q},             {"delta", config.delta},
           {"tol", config.tol},    {"max_iter", config.max_iter}, {"seed", config.seed}};
    if (!config.params.normalized) {
        j["m"] = config.params.m;
        j["mu"] = config.params.mu;
    }
    return j;
}

SolveConfig config_from_json(const json& j) {
    SolveConfig config;
    const double s = j.at("s").get<double>();
    const double c = j.at("c").get<double>();
    if (j.value("normalized", true))
        config.params = SymbolParams::make_normalized(s, c);
    else
        config.params = SymbolParams::make_general(s, c, j.at("m").get<double>(), j.at("mu").get<double>());
    config.p = j.at("p").get<double>();
    config.q = j.value("q", 4.0);
    config.delta = j.value("delta", 0.5);
    config.tol = j.value("tol", 1e-12);
    config.max_iter = j.value("max_iter", 200);
    config.seed = j.value("seed", kDefaultSeed);
    return config;
}

json report_to_json(const SolveConfig& config, const SolveReport& report) {
    json trace = json::array();
    for (const IterationRecord& rec : report.trace)
        trace.push_back({{"iter", rec.iter}, {"step_l2", rec.step_l2}, {"w_intersection", rec.w_intersection}});
    return json{{"config", config_to_json(config)},
                {"iterations", report.iterations},
                {"final_step", report.final_step},
                {"residual", report.residual},
                {"lipschitz_probe", report.lipschitz_probe},
                {"forcing_norm", report.forcing_norm},
                {"norms",
                 {{"q", report.w_norms.q},
                  {"l2", report.w_norms.l2},
                  {"lq", report.w_norms.lq},
                  {"h1", report.w_norms.h1},
                  {"w1q", report.w_norms.w1q},
                  {"intersection", report.w_norms.intersection}}},
                {"trace", trace},
                {"w", field_to_json(report.w)},
                {"u_c", field_to_json(report.u_c)}};
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open for writing: " + path);
    out << body;
    if (!out)
        throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    return json::parse(read_text_file(path));
}

} // namespace relspec
