#include "coorbit/topology.hpp"

#include <cmath>
#include <utility>

namespace coorbit {

TestSet::TestSet(std::vector<cvec> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw spec_error("TestSet: empty test set");
  const index_t d = vectors_.front().size();
  for (const cvec& v : vectors_) {
    if (v.size() != d) throw dimension_error("TestSet: mixed vector lengths");
    detail::require_finite(v, "TestSet");
  }
}

TestSet TestSet::dual_columns(const DualPair& pair) {
  std::vector<cvec> vectors;
  vectors.reserve(static_cast<std::size_t>(pair.size()));
  for (index_t k = 0; k < pair.size(); ++k) vectors.push_back(pair.dual.vector(k));
  return TestSet(std::move(vectors));
}

TestSet TestSet::combinations(const DualPair& pair, const cmat& coeffs) {
  if (coeffs.rows() != pair.size())
    throw dimension_error("TestSet: coefficient rows != frame size");
  std::vector<cvec> vectors;
  vectors.reserve(static_cast<std::size_t>(coeffs.cols()));
  for (index_t j = 0; j < coeffs.cols(); ++j)
    vectors.push_back(pair.dual.vectors() * coeffs.col(j));
  return TestSet(std::move(vectors));
}

double seminorm(const cvec& f, const cvec& v) {
  detail::require_same_size(f, v, "seminorm");
  return std::abs(inner(f, v));
}

ConvergenceTrace trace_convergence(std::span<const cvec> seq, const cvec& limit,
                                   const TestSet& tests, const DualPair& pair,
                                   const Weight& w) {
  if (tests.dim() != limit.size())
    throw dimension_error("trace_convergence: test set dimension mismatch");
  if (w.size() != pair.size())
    throw dimension_error("trace_convergence: weight length != frame size");

  const auto steps = static_cast<index_t>(seq.size());
  ConvergenceTrace trace;
  trace.seminorms.resize(steps, static_cast<index_t>(tests.size()));
  trace.coorbit_norms.resize(steps);
  trace.dual_column_seminorms.resize(steps, pair.size());
  trace.domination_pass = true;

  for (index_t n = 0; n < steps; ++n) {
    const cvec diff = seq[n] - limit;
    for (index_t j = 0; j < static_cast<index_t>(tests.size()); ++j)
      trace.seminorms(n, j) = seminorm(diff, tests.vectors()[static_cast<std::size_t>(j)]);

    const cvec coeff = analysis(pair.dual, diff);
    double sup = 0.0;
    for (index_t k = 0; k < pair.size(); ++k) {
      const double weighted = std::abs(coeff(k)) * w(k);
      trace.dual_column_seminorms(n, k) = std::abs(coeff(k));
      sup = std::max(sup, weighted);
    }
    trace.coorbit_norms(n) = sup;
    // |<diff, dual_k>| <= ||diff|| / w(k), checked as |coeff_k| w(k) <= sup.
    for (index_t k = 0; k < pair.size(); ++k)
      if (std::abs(coeff(k)) * w(k) > sup) trace.domination_pass = false;
  }
  return trace;
}

CounterexampleReport onb_counterexample(index_t n, index_t k_truncation,
                                        std::optional<Weight> w) {
  if (n < 2) throw spec_error("onb_counterexample: need n >= 2");
  if (k_truncation < 1 || k_truncation > n)
    throw spec_error("onb_counterexample: truncation outside [1, n]");
  const Weight weight = w ? std::move(*w) : Weight::constant(n);
  if (weight.size() != n)
    throw dimension_error("onb_counterexample: weight length != n");
  const bool weighted = w.has_value();

  const Frame onb{cmat::Identity(n, n)};
  const DualPair pair(onb, onb);

  CounterexampleReport report;
  report.seminorms.resize(n, k_truncation);
  report.norms.resize(n);
  report.pointwise_decay = true;
  report.norm_no_decay = true;

  for (index_t step = 0; step < n; ++step) {
    const cvec e_n = cvec::Unit(n, step);
    for (index_t k = 0; k < k_truncation; ++k) {
      report.seminorms(step, k) = seminorm(e_n, onb.vector(k));
      if (step != k && report.seminorms(step, k) != 0.0)
        report.pointwise_decay = false;
    }
    report.norms(step) = coorbit_norm(pair, weight, e_n);
    if (!weighted && report.norms(step) != 1.0) report.norm_no_decay = false;
  }
  if (weighted) report.norm_no_decay = false;
  return report;
}

ApproximationCertificate bounded_approximation_certificate(
    const DualPair& pair, const Weight& w, const cvec& f,
    std::span<const std::vector<index_t>> nesting, double tol) {
  const cvec alpha = analysis(pair.dual, f);
  ApproximationCertificate cert;
  cert.lift = partial_sum_lift(pair, w, alpha, nesting, tol);
  cert.uniform_bound = cert.lift.uniform_bound;
  cert.max_hinfw_norm = 0.0;
  for (const auto& level : cert.lift.levels)
    cert.max_hinfw_norm = std::max(cert.max_hinfw_norm, level.hinfw_norm);

  const cvec diff = cert.lift.levels.back().f_n - f;
  const cvec coeff = analysis(pair.dual, diff);
  cert.final_seminorms = coeff.cwiseAbs();
  cert.final_seminorm_sup = cert.final_seminorms.size() > 0
                                ? cert.final_seminorms.maxCoeff()
                                : 0.0;

  const double scale = tol * (1.0 + linf_w_norm(alpha, w));
  cert.pass = cert.lift.pass &&
              cert.max_hinfw_norm <= cert.uniform_bound * (1.0 + kFloatSlack) + 1e-300 &&
              linf_w_norm(coeff, w) <= scale;
  return cert;
}

}  // namespace coorbit
