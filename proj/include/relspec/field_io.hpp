#pragma once

#include <string>

#include <json.hpp>

#include "relspec/grid.hpp"
#include "relspec/solver.hpp"

namespace relspec {

nlohmann::json field_to_json(const RadialField& u);
RadialField field_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SolveConfig& config);
SolveConfig config_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SolveConfig& config, const SolveReport& report);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

} // namespace relspec
