#include "coorbit/serialize.hpp"
#include "coorbit/suites.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> out_dir;
  std::optional<double> perturb;
  std::vector<coorbit::index_t> sizes;
};

void attach_common(CLI::App* cmd, CommonOptions& opts, bool needs_config = true) {
  auto* config = cmd->add_option("--config", opts.config_path,
                                 "run configuration document (json)");
  if (needs_config) config->required();
  cmd->add_option("--seed", opts.seed, "override the configured seed");
  cmd->add_option("--tol", opts.tol, "override the relative residual tolerance");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--perturb", opts.perturb,
                  "fault injection: offset the first dual column by this amount");
  cmd->add_option("--sizes", opts.sizes,
                  "truncation sizes (increasing)")->delimiter(',');
}

coorbit::RunConfig load_with_overrides(const CommonOptions& opts) {
  coorbit::RunConfig config = coorbit::load_config(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.tol) {
    if (!(*opts.tol > 0)) throw coorbit::spec_error("--tol must be positive");
    config.tolerances.residual = *opts.tol;
  }
  if (opts.out_dir) config.out_dir = *opts.out_dir;
  if (opts.perturb) {
    if (!(*opts.perturb >= 0)) throw coorbit::spec_error("--perturb must be >= 0");
    config.perturb = *opts.perturb;
  }
  if (!opts.sizes.empty()) config.sizes = opts.sizes;
  config.validate();
  return config;
}

int finish(const coorbit::ExperimentReport& report, const std::string& out_dir,
           const std::string& file_name) {
  const auto path = std::filesystem::path(out_dir) / file_name;
  coorbit::save_json(path, coorbit::report_to_json(report));
  std::cout << coorbit::render_report_text(report);
  std::cout << "report: " << path.string() << '\n';
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame and co-orbit space verification toolkit"};
  app.require_subcommand(1);

  CommonOptions gallery_opts, analyze_opts, verify_opts, converge_opts;
  std::string report_path;

  auto* gallery = app.add_subcommand("gallery", "materialize frames to disk");
  attach_common(gallery, gallery_opts);

  auto* analyze = app.add_subcommand(
      "analyze", "frame bounds, duals, operator norms, localization");
  attach_common(analyze, analyze_opts);

  auto* verify =
      app.add_subcommand("verify", "run the verification suites");
  attach_common(verify, verify_opts);

  auto* converge = app.add_subcommand(
      "converge", "convergence traces and the basis counterexample (csv)");
  attach_common(converge, converge_opts);

  auto* report_cmd =
      app.add_subcommand("report", "render a stored report as text");
  report_cmd->add_option("--in", report_path, "report document to render")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error.
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gallery->parsed()) {
      const auto config = load_with_overrides(gallery_opts);
      return finish(coorbit::run_gallery(config), config.out_dir,
                    "gallery_report.json");
    }
    if (analyze->parsed()) {
      const auto config = load_with_overrides(analyze_opts);
      return finish(coorbit::run_analyze(config), config.out_dir,
                    "analyze_report.json");
    }
    if (verify->parsed()) {
      const auto config = load_with_overrides(verify_opts);
      return finish(coorbit::run_verify(config), config.out_dir,
                    "verify_report.json");
    }
    if (converge->parsed()) {
      const auto config = load_with_overrides(converge_opts);
      return finish(coorbit::run_converge(config), config.out_dir,
                    "converge_report.json");
    }
    if (report_cmd->parsed()) {
      const auto report =
          coorbit::report_from_json(coorbit::load_json(report_path));
      std::cout << coorbit::render_report_text(report);
      return report.all_pass() ? kExitPass : kExitCheckFailed;
    }
  } catch (const coorbit::spec_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const coorbit::dimension_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
