#pragma once

#include "coorbit/config.hpp"
#include "coorbit/frame.hpp"
#include "coorbit/gallery.hpp"
#include "coorbit/report.hpp"
#include "coorbit/types.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace coorbit {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Complex entries are serialized as [re, im] pairs of decimal doubles; the
// shortest-round-trip encoding makes serialize/deserialize exact.

json frame_to_json(const Frame& frame, const std::string& name = "");
Frame frame_from_json(const json& j);
std::string frame_name_from_json(const json& j);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json coefficients_to_json(const cvec& seq);
cvec coefficients_from_json(const json& j);

json frame_spec_to_json(const FrameSpec& spec);
FrameSpec frame_spec_from_json(const json& j);

json weight_spec_to_json(const WeightSpec& spec);
WeightSpec weight_spec_from_json(const json& j);

json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const json& j);

json config_to_json(const RunConfig& config);
RunConfig config_from_json(const json& j);
RunConfig load_config(const std::filesystem::path& path);

void save_json(const std::filesystem::path& path, const json& j);
json load_json(const std::filesystem::path& path);

/// Comma-separated table with a header row; numeric cells use the shortest
/// round-trip encoding.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace coorbit
