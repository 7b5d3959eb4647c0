#pragma once

#include "coorbit/frame.hpp"
#include "coorbit/gram.hpp"
#include "coorbit/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace coorbit {

/// Finite test set of vectors spanning combinations of dual-frame columns,
/// the probes of the dual-pairing seminorm topology.
class TestSet {
 public:
  explicit TestSet(std::vector<cvec> vectors);

  /// All dual-frame columns.
  static TestSet dual_columns(const DualPair& pair);
  /// Columns of DualPsi * coeffs: finite linear combinations of dual columns.
  static TestSet combinations(const DualPair& pair, const cmat& coeffs);

  const std::vector<cvec>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  index_t dim() const { return vectors_.front().size(); }

 private:
  std::vector<cvec> vectors_;
};

/// |<f, v>|.
double seminorm(const cvec& f, const cvec& v);

struct ConvergenceTrace {
  Eigen::MatrixXd seminorms;    // step x test vector: |<f_n - f, v>|
  rvec coorbit_norms;           // step: ||f_n - f|| in the co-orbit norm
  Eigen::MatrixXd dual_column_seminorms;  // step x k: |<f_n - f, dual_k>|
  bool domination_pass;  // w(k)-scaled pointwise bound by the norm column
};

/// Full seminorm-versus-norm trace of a sequence against its limit. Also
/// certifies, step by step, that the dual-column seminorms are dominated by
/// the co-orbit norm with the explicit rate 1/w(k); the check is evaluated in
/// the w(k)-scaled form, which holds exactly as computed.
ConvergenceTrace trace_convergence(std::span<const cvec> seq, const cvec& limit,
                                   const TestSet& tests, const DualPair& pair,
                                   const Weight& w);

struct CounterexampleReport {
  Eigen::MatrixXd seminorms;  // n x K: |<e_n, e_k>|
  rvec norms;                 // n: ||e_n|| in the co-orbit norm
  bool pointwise_decay;       // every column vanishes off its own index
  bool norm_no_decay;         // w == 1: every norm equals one exactly
};

/// The orthonormal-basis experiment: under w == 1 the basis sequence dies
/// against every fixed test vector yet keeps co-orbit norm exactly one, so
/// seminorm convergence cannot imply norm convergence. A weighted variant
/// turns the norm column into w(n).
CounterexampleReport onb_counterexample(index_t n, index_t k_truncation,
                                        std::optional<Weight> w = std::nullopt);

struct ApproximationCertificate {
  PartialSumLift lift;
  double uniform_bound;        // ||alpha||_{l^inf_w} * ||G||
  double max_hinfw_norm;       // sup_n over the lift levels
  rvec final_seminorms;        // |<f_N - f, dual_k>| per k
  double final_seminorm_sup;
  bool pass;
};

/// Builds the norm-bounded approximating sequence of f from its own
/// coefficients via partial_sum_lift and certifies the uniform bound plus
/// seminorm convergence on the dual-column test set.
ApproximationCertificate bounded_approximation_certificate(
    const DualPair& pair, const Weight& w, const cvec& f,
    std::span<const std::vector<index_t>> nesting, double tol);

}  // namespace coorbit
