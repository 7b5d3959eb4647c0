#pragma once

#include "coorbit/config.hpp"
#include "coorbit/report.hpp"

#include <string>

namespace coorbit {

/// Materializes every frame in the config and writes one frame document per
/// spec into out_dir.
ExperimentReport run_gallery(const RunConfig& config);

/// Per-frame diagnostics (frame bounds, duality residuals, operator norms,
/// localization); data goes to out_dir/analysis.json.
ExperimentReport run_analyze(const RunConfig& config);

/// The full verification battery over frames x weights. One record per check;
/// all_pass() decides the process exit code.
ExperimentReport run_verify(const RunConfig& config);

/// Convergence traces and the orthonormal-basis experiment, exported as CSV
/// tables under out_dir.
ExperimentReport run_converge(const RunConfig& config);

/// Human-readable rendering of a report, one line per record.
std::string render_report_text(const ExperimentReport& report);

}  // namespace coorbit
