#include "coorbit/serialize.hpp"

#include <fstream>
#include <sstream>

namespace coorbit {

namespace {

json complex_array(const cmat& values) {
  json entries = json::array();
  // Row-major over the ambient index: entries[i*M + k] = column k, row i.
  for (index_t i = 0; i < values.rows(); ++i)
    for (index_t k = 0; k < values.cols(); ++k)
      entries.push_back(json::array({values(i, k).real(), values(i, k).imag()}));
  return entries;
}

cmat complex_matrix(const json& entries, index_t rows, index_t cols,
                    const char* what) {
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows * cols))
    throw spec_error(std::string(what) + ": entry count does not match shape");
  cmat values(rows, cols);
  std::size_t pos = 0;
  for (index_t i = 0; i < rows; ++i)
    for (index_t k = 0; k < cols; ++k, ++pos) {
      const json& cell = entries[pos];
      if (!cell.is_array() || cell.size() != 2)
        throw spec_error(std::string(what) + ": entries must be [re, im] pairs");
      values(i, k) = cdouble(cell[0].get<double>(), cell[1].get<double>());
    }
  return values;
}

void require_type(const json& j, const char* type) {
  if (j.value("type", "") != type)
    throw spec_error(std::string("expected a document of type '") + type + "'");
}

template <typename T>
T get_or(const json& j, const char* name, T fallback) {
  if (!j.contains(name)) return fallback;
  return j.at(name).get<T>();
}

}  // namespace

json frame_to_json(const Frame& frame, const std::string& name) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "frame";
  if (!name.empty()) j["name"] = name;
  j["d"] = frame.dim();
  j["m"] = frame.size();
  j["entries"] = complex_array(frame.vectors());
  return j;
}

Frame frame_from_json(const json& j) {
  require_type(j, "frame");
  const auto d = j.at("d").get<index_t>();
  const auto m = j.at("m").get<index_t>();
  return Frame(complex_matrix(j.at("entries"), d, m, "frame"));
}

std::string frame_name_from_json(const json& j) { return j.value("name", ""); }

json weight_to_json(const Weight& w) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "weight";
  j["values"] = std::vector<double>(w.values().begin(), w.values().end());
  return j;
}

Weight weight_from_json(const json& j) {
  require_type(j, "weight");
  const auto values = j.at("values").get<std::vector<double>>();
  rvec v(static_cast<index_t>(values.size()));
  for (index_t i = 0; i < v.size(); ++i) v(i) = values[static_cast<std::size_t>(i)];
  return Weight(std::move(v));
}

json coefficients_to_json(const cvec& seq) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "coefficients";
  j["m"] = seq.size();
  json entries = json::array();
  for (index_t k = 0; k < seq.size(); ++k)
    entries.push_back(json::array({seq(k).real(), seq(k).imag()}));
  j["entries"] = std::move(entries);
  return j;
}

cvec coefficients_from_json(const json& j) {
  require_type(j, "coefficients");
  const auto m = j.at("m").get<index_t>();
  const cmat values = complex_matrix(j.at("entries"), 1, m, "coefficients");
  return values.transpose();
}

json frame_spec_to_json(const FrameSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  if (!spec.name.empty()) j["name"] = spec.name;
  switch (spec.kind) {
    case FrameKind::onb:
      j["d"] = spec.d;
      break;
    case FrameKind::repeated_onb:
      j["d"] = spec.d;
      j["copies"] = spec.copies;
      break;
    case FrameKind::random_tight:
      j["d"] = spec.d;
      j["m"] = spec.m;
      j["seed"] = spec.seed;
      break;
    case FrameKind::riesz:
      j["d"] = spec.d;
      j["condition"] = spec.condition;
      j["seed"] = spec.seed;
      break;
    case FrameKind::gabor_zn:
      j["n"] = spec.n;
      j["a"] = spec.time_step;
      j["b"] = spec.freq_step;
      j["seed"] = spec.seed;
      break;
    case FrameKind::banded_decay:
      j["n"] = spec.n;
      j["decay"] = spec.decay;
      j["bandwidth"] = spec.bandwidth;
      j["seed"] = spec.seed;
      break;
  }
  return j;
}

FrameSpec frame_spec_from_json(const json& j) {
  FrameSpec spec;
  spec.kind = frame_kind_from_string(j.at("kind").get<std::string>());
  spec.name = j.value("name", "");
  spec.d = get_or<index_t>(j, "d", spec.d);
  spec.m = get_or<index_t>(j, "m", spec.m);
  spec.copies = get_or<index_t>(j, "copies", spec.copies);
  spec.n = get_or<index_t>(j, "n", spec.n);
  spec.time_step = get_or<index_t>(j, "a", spec.time_step);
  spec.freq_step = get_or<index_t>(j, "b", spec.freq_step);
  spec.decay = get_or<double>(j, "decay", spec.decay);
  spec.bandwidth = get_or<index_t>(j, "bandwidth", spec.bandwidth);
  spec.condition = get_or<double>(j, "condition", spec.condition);
  spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed);
  spec.validate();
  return spec;
}

json weight_spec_to_json(const WeightSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  if (spec.kind == WeightKind::polynomial) j["exponent"] = spec.exponent;
  if (spec.kind == WeightKind::exponential) j["rate"] = spec.rate;
  return j;
}

WeightSpec weight_spec_from_json(const json& j) {
  WeightSpec spec;
  spec.kind = weight_kind_from_string(j.at("kind").get<std::string>());
  spec.exponent = get_or<double>(j, "exponent", spec.exponent);
  spec.rate = get_or<double>(j, "rate", spec.rate);
  spec.validate();
  return spec;
}

json report_to_json(const ExperimentReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["type"] = "report";
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["rng_algorithm"] = report.rng_algorithm;
  // The one volatile field: everything else is byte-identical across runs
  // with the same config and seed.
  j["timestamp"] = {{"utc", report.timestamp},
                    {"elapsed_seconds", report.elapsed_seconds}};
  j["all_pass"] = report.all_pass();
  json records = json::array();
  for (const auto& record : report.records) {
    json r;
    r["id"] = record.id;
    r["statement"] = record.statement;
    if (!record.frame.empty()) r["frame"] = record.frame;
    if (!record.weight.empty()) r["weight"] = record.weight;
    r["inputs_digest"] = record.inputs_digest;
    r["residual"] = record.residual;
    r["tolerance"] = record.tolerance;
    r["pass"] = record.pass;
    if (!record.warnings.empty()) r["warnings"] = record.warnings;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

ExperimentReport report_from_json(const json& j) {
  require_type(j, "report");
  ExperimentReport report;
  report.schema_version = j.at("schema_version").get<int>();
  report.command = j.value("command", "");
  report.seed = get_or<std::uint64_t>(j, "seed", 0);
  report.rng_algorithm = j.value("rng_algorithm", "");
  if (j.contains("timestamp") && j.at("timestamp").is_object()) {
    report.timestamp = j.at("timestamp").value("utc", "");
    report.elapsed_seconds = get_or<double>(j.at("timestamp"), "elapsed_seconds", 0.0);
  }
  for (const auto& r : j.at("records")) {
    CheckRecord record;
    record.id = r.at("id").get<std::string>();
    record.statement = r.value("statement", "");
    record.frame = r.value("frame", "");
    record.weight = r.value("weight", "");
    record.inputs_digest = r.value("inputs_digest", "");
    record.residual = r.at("residual").get<double>();
    record.tolerance = r.at("tolerance").get<double>();
    record.pass = r.at("pass").get<bool>();
    if (r.contains("warnings"))
      record.warnings = r.at("warnings").get<std::vector<std::string>>();
    report.records.push_back(std::move(record));
  }
  return report;
}

void Tolerances::validate() const {
  if (!(residual > 0) || !(duality > 0) || !(rank > 0) || !(angle > 0) ||
      !(truncation_gap > 0))
    throw spec_error("tolerances must be positive");
}

void ConvergeConfig::validate() const {
  if (steps < 1) throw spec_error("converge.steps must be >= 1");
  if (counterexample_n < 2) throw spec_error("converge.counterexample_n must be >= 2");
  if (counterexample_k < 1 || counterexample_k > counterexample_n)
    throw spec_error("converge.counterexample_k must lie in [1, n]");
  if (has_test_indices && test_indices.empty())
    throw spec_error("converge.test_indices: empty test set");
}

void RunConfig::validate() const {
  if (schema_version != kSchemaVersion)
    throw spec_error("unsupported config schema_version");
  tolerances.validate();
  converge.validate();
  if (random_probes < 1) throw spec_error("random_probes must be >= 1");
  if (opnorm_probes < 1) throw spec_error("opnorm_probes must be >= 1");
  if (!(perturb >= 0.0)) throw spec_error("perturb must be >= 0");
  if (frames.empty()) throw spec_error("config lists no frames");
  for (const auto& f : frames) f.validate();
  for (const auto& w : weights) w.validate();
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw spec_error("sizes must be strictly increasing");
}

bool RunConfig::suite_enabled(const std::string& name) const {
  if (suites.empty()) return true;
  for (const auto& s : suites)
    if (s == name) return true;
  return false;
}

json config_to_json(const RunConfig& config) {
  json j;
  j["schema_version"] = config.schema_version;
  j["type"] = "config";
  j["seed"] = config.seed;
  j["out_dir"] = config.out_dir;
  j["tolerances"] = {{"residual", config.tolerances.residual},
                     {"duality", config.tolerances.duality},
                     {"rank", config.tolerances.rank},
                     {"angle", config.tolerances.angle},
                     {"truncation_gap", config.tolerances.truncation_gap}};
  j["random_probes"] = config.random_probes;
  j["opnorm_probes"] = config.opnorm_probes;
  if (config.perturb > 0.0) j["perturb"] = config.perturb;
  if (!config.sizes.empty()) j["sizes"] = config.sizes;
  if (!config.suites.empty()) j["suites"] = config.suites;
  json frames = json::array();
  for (const auto& f : config.frames) frames.push_back(frame_spec_to_json(f));
  j["frames"] = std::move(frames);
  json weights = json::array();
  for (const auto& w : config.weights) weights.push_back(weight_spec_to_json(w));
  j["weights"] = std::move(weights);
  json converge;
  converge["steps"] = config.converge.steps;
  converge["counterexample_n"] = config.converge.counterexample_n;
  converge["counterexample_k"] = config.converge.counterexample_k;
  if (config.converge.has_test_indices)
    converge["test_indices"] = config.converge.test_indices;
  j["converge"] = std::move(converge);
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig config;
  config.schema_version = get_or<int>(j, "schema_version", kSchemaVersion);
  config.seed = get_or<std::uint64_t>(j, "seed", config.seed);
  config.out_dir = j.value("out_dir", config.out_dir);
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    config.tolerances.residual = get_or<double>(t, "residual", config.tolerances.residual);
    config.tolerances.duality = get_or<double>(t, "duality", config.tolerances.duality);
    config.tolerances.rank = get_or<double>(t, "rank", config.tolerances.rank);
    config.tolerances.angle = get_or<double>(t, "angle", config.tolerances.angle);
    config.tolerances.truncation_gap =
        get_or<double>(t, "truncation_gap", config.tolerances.truncation_gap);
  }
  config.random_probes = get_or<index_t>(j, "random_probes", config.random_probes);
  config.opnorm_probes = get_or<index_t>(j, "opnorm_probes", config.opnorm_probes);
  config.perturb = get_or<double>(j, "perturb", config.perturb);
  if (j.contains("sizes")) config.sizes = j.at("sizes").get<std::vector<index_t>>();
  if (j.contains("suites"))
    config.suites = j.at("suites").get<std::vector<std::string>>();
  if (j.contains("frames"))
    for (const auto& f : j.at("frames"))
      config.frames.push_back(frame_spec_from_json(f));
  if (j.contains("weights"))
    for (const auto& w : j.at("weights"))
      config.weights.push_back(weight_spec_from_json(w));
  if (config.weights.empty()) config.weights.push_back(WeightSpec{});
  if (j.contains("converge")) {
    const json& c = j.at("converge");
    config.converge.steps = get_or<index_t>(c, "steps", config.converge.steps);
    config.converge.counterexample_n =
        get_or<index_t>(c, "counterexample_n", config.converge.counterexample_n);
    config.converge.counterexample_k =
        get_or<index_t>(c, "counterexample_k", config.converge.counterexample_k);
    if (c.contains("test_indices")) {
      config.converge.has_test_indices = true;
      config.converge.test_indices =
          c.at("test_indices").get<std::vector<index_t>>();
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  return config_from_json(load_json(path));
}

void save_json(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw error("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw error("write failed: " + path.string());
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw spec_error("invalid json in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw error("cannot open for writing: " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      // json's double writer is shortest-round-trip; reuse it for the cells.
      out << json(row[i]).dump() << (i + 1 < row.size() ? "," : "\n");
    }
  }
  if (!out) throw error("write failed: " + path.string());
}

}  // namespace coorbit
