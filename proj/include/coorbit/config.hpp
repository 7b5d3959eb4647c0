#pragma once

#include "coorbit/gallery.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coorbit {

/// Tolerances shared by the verification suites. Residual checks are
/// relative; rank and angle thresholds are the subspace cutoffs.
struct Tolerances {
  double residual = 1e-10;
  double duality = 1e-9;
  double rank = 1e-8;
  double angle = 1e-8;
  double truncation_gap = 1e-6;

  void validate() const;
};

/// Convergence-experiment settings: length of the decaying traces and the
/// size/truncation of the orthonormal-basis experiment. An explicit empty
/// test_indices list is a configuration error.
struct ConvergeConfig {
  index_t steps = 16;
  index_t counterexample_n = 8;
  index_t counterexample_k = 4;
  bool has_test_indices = false;
  std::vector<index_t> test_indices;

  void validate() const;
};

/// One batch run: which frames and weights, which suites, and how hard to
/// probe. Deterministic given (config, seed).
struct RunConfig {
  int schema_version = 1;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  Tolerances tolerances;
  index_t random_probes = 100;
  index_t opnorm_probes = 1000;
  double perturb = 0.0;
  std::vector<index_t> sizes;
  std::vector<std::string> suites;  // empty: run everything
  std::vector<FrameSpec> frames;
  std::vector<WeightSpec> weights;
  ConvergeConfig converge;

  void validate() const;
  bool suite_enabled(const std::string& name) const;
};

}  // namespace coorbit
