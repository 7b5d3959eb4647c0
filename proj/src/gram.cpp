#include "coorbit/gram.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace coorbit {

namespace {

constexpr double kRankThreshold = 1e-8;  // relative to the largest singular value

// JacobiSVD throughout: this Eigen's divide-and-conquer SVD mishandles
// complex inputs (wrong values, non-finite vectors).
Eigen::JacobiSVD<cmat> svd_of(const cmat& a, unsigned options) {
  Eigen::JacobiSVD<cmat> svd(a, options);
  if (svd.info() != Eigen::Success) throw error("svd failed to converge");
  return svd;
}

}  // namespace

CrossGram::CrossGram(const DualPair& pair, Weight w)
    : g_(pair.dual.vectors().adjoint() * pair.primal.vectors()), w_(std::move(w)) {
  const index_t m = g_.rows();
  if (w_.size() != m)
    throw dimension_error("CrossGram: weight length != frame size");
  inv_weighted_sums_.resize(m);
  weighted_sums_.resize(m);
  for (index_t k = 0; k < m; ++k) {
    double s = 0.0;
    for (index_t l = 0; l < m; ++l) s += std::abs(g_(k, l)) / w_(l);
    inv_weighted_sums_(k) = s;
    weighted_sums_(k) = w_(k) * s;
  }
  opnorm_ = weighted_sums_.maxCoeff(&opnorm_row_);
}

cvec CrossGram::extremal_vector(index_t k) const {
  if (k < 0 || k >= size()) throw dimension_error("extremal_vector: row out of range");
  cvec alpha(size());
  for (index_t l = 0; l < size(); ++l) {
    const cdouble entry = g_(k, l);
    const double mag = std::abs(entry);
    const cdouble phase = mag > 0.0 ? cdouble(std::conj(entry) / mag) : cdouble(1.0, 0.0);
    alpha(l) = phase / w_(l);
  }
  return alpha;
}

CrossGram cross_gram(const DualPair& pair, const Weight& w) {
  return CrossGram(pair, w);
}

double gram_opnorm_linf_w(const CrossGram& g) { return g.opnorm(); }

double coorbit_norm(const DualPair& pair, const Weight& w, const cvec& f) {
  return linf_w_norm(analysis(pair.dual, f), w);
}

double fixed_point_residual(const CrossGram& g, const cvec& alpha) {
  if (alpha.size() != g.size())
    throw dimension_error("fixed_point_residual: sequence length != gram size");
  return linf_w_norm(g.matrix() * alpha - alpha, g.weight());
}

FixedPointSpace::FixedPointSpace(cmat basis) : basis_(std::move(basis)) {
  if (basis_.cols() < 1 || basis_.rows() < basis_.cols())
    throw consistency_error("FixedPointSpace: invalid basis shape");
}

FixedPointSpace range_basis(const DualPair& pair) {
  // Column space of the M x d coefficient matrix C_dual = DualPsi^H.
  const cmat coeff = pair.dual.vectors().adjoint();
  const auto svd = svd_of(coeff, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double thresh = kRankThreshold * sv(0);
  index_t rank = 0;
  while (rank < sv.size() && sv(rank) > thresh) ++rank;
  if (rank != pair.dim())
    throw consistency_error(
        "range_basis: coefficient operator is rank deficient (" +
        std::to_string(rank) + " of " + std::to_string(pair.dim()) + ")");
  return FixedPointSpace(svd.matrixU().leftCols(rank));
}

ProjectionCheck verify_projection_identity(const DualPair& pair, const Weight& w,
                                           double tol, double angle_tol) {
  const CrossGram gram(pair, w);
  const cmat& g = gram.matrix();
  const index_t m = g.rows();
  const index_t d = pair.dim();

  const cmat coeff = pair.dual.vectors().adjoint();  // M x d
  const double range_res =
      operator_norm(g * coeff - coeff) / (1.0 + operator_norm(coeff));
  const double proj_res = (g * g - g).norm() / (1.0 + g.norm());

  const auto svd_g = svd_of(g, 0);
  const double scale = svd_g.singularValues()(0);
  const double thresh = kRankThreshold * scale;
  index_t rank = 0;
  while (rank < m && svd_g.singularValues()(rank) > thresh) ++rank;

  // Eigenvalue-1 eigenspace as the null space of G - I. The rank cutoff is
  // taken on the scale of G itself: for an oblique projection the nonzero
  // singular values of G - I sit at 1 or above, while for G = I the whole
  // difference is rounding noise and the entire space is the eigenspace.
  const auto svd_shift = svd_of(g - cmat::Identity(m, m), Eigen::ComputeFullV);
  index_t null_dim = 0;
  for (index_t i = 0; i < m; ++i)
    if (svd_shift.singularValues()(i) <= thresh) ++null_dim;
  const cmat eig_basis = svd_shift.matrixV().rightCols(null_dim);

  const FixedPointSpace range = range_basis(pair);
  // sin of the largest principal angle; accurate where the acos form is not.
  double angle = 0.0;
  if (null_dim > 0) {
    const cmat res =
        eig_basis - range.basis() * (range.basis().adjoint() * eig_basis);
    angle = operator_norm(res);
  }

  const bool pass = range_res <= tol && proj_res <= tol && rank == d &&
                    null_dim == d && angle <= angle_tol;
  return {range_res, proj_res, rank, null_dim, angle, tol, angle_tol, pass};
}

CoefficientBoundReport psi_coefficient_bound(const CrossGram& g) {
  const index_t m = g.size();
  const Weight& w = g.weight();
  rvec lhs(m), rhs(m);
  for (index_t l = 0; l < m; ++l) {
    double sup = 0.0;
    for (index_t k = 0; k < m; ++k)
      sup = std::max(sup, std::abs(g.matrix()(k, l)) * w(k));
    lhs(l) = sup;
    rhs(l) = w(l) * g.opnorm();
  }
  const double min_margin = (rhs - lhs).minCoeff();
  bool pass = true;
  for (index_t l = 0; l < m; ++l)
    if (lhs(l) > rhs(l) * (1.0 + kFloatSlack)) pass = false;
  return {std::move(lhs), std::move(rhs), min_margin, pass};
}

CoefficientBoundReport psi_coefficient_bound(const DualPair& pair, const Weight& w) {
  return psi_coefficient_bound(CrossGram(pair, w));
}

MajorantReport l1_majorant(const CrossGram& g, index_t k, double norm_bound) {
  if (k < 0 || k >= g.size()) throw dimension_error("l1_majorant: index out of range");
  if (!(norm_bound >= 0.0)) throw spec_error("l1_majorant: bound must be >= 0");
  const Weight& w = g.weight();
  rvec majorant(g.size());
  for (index_t l = 0; l < g.size(); ++l)
    majorant(l) = norm_bound * std::abs(g.matrix()(k, l)) / w(l);
  const double total = majorant.sum();
  const double limit = norm_bound * g.opnorm() / w(k);
  // w(k)-scaled form: w(k) s_k <= max_j w(j) s_j holds exactly as computed.
  const bool pass = g.weighted_row_sum(k) <= g.opnorm();
  return {std::move(majorant), total, limit, pass};
}

MajorantReport l1_majorant(const DualPair& pair, const Weight& w, index_t k,
                           double norm_bound) {
  return l1_majorant(CrossGram(pair, w), k, norm_bound);
}

std::vector<std::vector<index_t>> prefix_nesting(index_t m) {
  std::vector<std::vector<index_t>> nesting;
  nesting.reserve(static_cast<std::size_t>(m));
  std::vector<index_t> prefix;
  for (index_t i = 0; i < m; ++i) {
    prefix.push_back(i);
    nesting.push_back(prefix);
  }
  return nesting;
}

PartialSumLift partial_sum_lift(const DualPair& pair, const Weight& w,
                                const cvec& alpha,
                                std::span<const std::vector<index_t>> nesting,
                                double tol) {
  const index_t m = pair.size();
  if (alpha.size() != m)
    throw dimension_error("partial_sum_lift: sequence length != frame size");
  if (nesting.empty())
    throw precondition_error("partial_sum_lift: empty nesting");

  // Increasing chain of subsets, the last one covering every index.
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::size_t covered = 0;
  for (std::size_t level = 0; level < nesting.size(); ++level) {
    std::size_t fresh = 0;
    for (index_t idx : nesting[level]) {
      if (idx < 0 || idx >= m)
        throw precondition_error("partial_sum_lift: nesting index out of range");
      if (!seen[static_cast<std::size_t>(idx)]) {
        seen[static_cast<std::size_t>(idx)] = true;
        ++fresh;
      }
    }
    if (nesting[level].size() != covered + fresh)
      throw precondition_error("partial_sum_lift: nesting is not increasing");
    covered += fresh;
  }
  if (covered != static_cast<std::size_t>(m))
    throw precondition_error("partial_sum_lift: nesting does not cover the index set");

  const CrossGram gram(pair, w);
  const double alpha_norm = linf_w_norm(alpha, w);
  const double fp_res = fixed_point_residual(gram, alpha);
  if (fp_res > tol * (1.0 + alpha_norm))
    throw precondition_error("partial_sum_lift: alpha is not a fixed point of G");

  PartialSumLift lift;
  lift.uniform_bound = alpha_norm * gram.opnorm();

  std::vector<cvec> partials;
  partials.reserve(nesting.size());
  for (const auto& subset : nesting) {
    cvec f = cvec::Zero(pair.dim());
    for (index_t idx : subset) f += alpha(idx) * pair.primal.vector(idx);
    partials.push_back(std::move(f));
  }

  const cvec final_coeff = analysis(pair.dual, partials.back());
  lift.final_match_residual = linf_w_norm(final_coeff - alpha, w);

  lift.bound_pass = true;
  for (std::size_t level = 0; level < nesting.size(); ++level) {
    PartialSumLevel rec;
    rec.subset = nesting[level];
    rec.f_n = partials[level];
    rec.hinfw_norm = coorbit_norm(pair, w, rec.f_n);
    rec.cauchy_residual = coorbit_norm(pair, w, partials.back() - rec.f_n);
    if (rec.hinfw_norm > lift.uniform_bound * (1.0 + kFloatSlack) + 1e-300)
      lift.bound_pass = false;
    lift.levels.push_back(std::move(rec));
  }

  const double scale = tol * (1.0 + alpha_norm);
  lift.pass = lift.bound_pass && lift.final_match_residual <= scale &&
              lift.levels.back().cauchy_residual <= scale;
  return lift;
}

}  // namespace coorbit
