#pragma once

#include "coorbit/frame.hpp"
#include "coorbit/hilbert.hpp"
#include "coorbit/types.hpp"

#include <span>
#include <vector>

namespace coorbit {

/// Rounding allowance for inequality checks whose two sides are independently
/// computed floating-point quantities. Far below every meaningful margin.
inline constexpr double kFloatSlack = 1e-12;

/// Cross Gram matrix G[k,l] = <psi_l, dual_k> = (C_dual D_psi)[k,l], together
/// with the weighted row-sum data that the l^inf_w operator norm is built
/// from:
///   s_k = sum_l |G[k,l]| / w(l),   r_k = w(k) * s_k,   ||G|| = max_k r_k.
/// The row-sum expression is the exact operator norm on l^inf_w; the
/// unimodular vector from extremal_vector attains it row by row.
class CrossGram {
 public:
  CrossGram(const DualPair& pair, Weight w);

  const cmat& matrix() const { return g_; }
  const Weight& weight() const { return w_; }
  index_t size() const { return g_.rows(); }

  double row_sum(index_t k) const { return inv_weighted_sums_(k); }
  double weighted_row_sum(index_t k) const { return weighted_sums_(k); }
  const rvec& weighted_row_sums() const { return weighted_sums_; }

  /// Operator norm of G on l^inf_w.
  double opnorm() const { return opnorm_; }
  /// Row realizing the norm.
  index_t opnorm_row() const { return opnorm_row_; }

  /// alpha with ||alpha||_{l^inf_w} = 1 for which (G alpha)_k = s_k exactly:
  /// alpha_l = conj(G[k,l]) / (|G[k,l]| w(l)), unimodular part 1 where G[k,l]
  /// vanishes.
  cvec extremal_vector(index_t k) const;

 private:
  cmat g_;
  Weight w_;
  rvec inv_weighted_sums_;
  rvec weighted_sums_;
  double opnorm_ = 0.0;
  index_t opnorm_row_ = 0;
};

CrossGram cross_gram(const DualPair& pair, const Weight& w);

/// sup_k w(k) sum_l |G[k,l]| / w(l) — the exact B(l^inf_w) norm.
double gram_opnorm_linf_w(const CrossGram& g);

/// ||C_dual f||_{l^inf_w}: the co-orbit norm of f for this pair and weight.
double coorbit_norm(const DualPair& pair, const Weight& w, const cvec& f);

/// ||G alpha - alpha||_{l^inf_w}.
double fixed_point_residual(const CrossGram& g, const cvec& alpha);

/// Orthonormal basis of R(C_dual), the range of the coefficient operator as
/// an M x d matrix. This is exactly the fixed-point space of G.
class FixedPointSpace {
 public:
  FixedPointSpace(cmat basis);

  const cmat& basis() const { return basis_; }
  index_t dimension() const { return basis_.cols(); }
  index_t ambient_size() const { return basis_.rows(); }

 private:
  cmat basis_;
};

FixedPointSpace range_basis(const DualPair& pair);

struct ProjectionCheck {
  double range_identity_residual;  // ||G C_dual - C_dual||_2 / (1 + ||C_dual||_2)
  double projection_residual;      // ||G^2 - G||_F / (1 + ||G||_F)
  index_t rank;                    // numerical rank of G
  index_t eigenspace_dim;          // dim of the eigenvalue-1 eigenspace
  double principal_angle;          // sin of the largest principal angle
  double tolerance;
  double angle_tolerance;
  bool pass;
};

/// Finite-model identity suite for the pair: G acts as the identity on the
/// range of the coefficient operator, G is an oblique projection of rank d,
/// and its eigenvalue-1 eigenspace coincides with range_basis.
ProjectionCheck verify_projection_identity(const DualPair& pair, const Weight& w,
                                           double tol, double angle_tol = 1e-8);

struct CoefficientBoundReport {
  rvec lhs;          // per l: sup_k |G[k,l]| w(k) = ||C_dual psi_l||_{l^inf_w}
  rvec rhs;          // per l: w(l) * ||G||
  double min_margin; // min_l (rhs_l - lhs_l)
  bool pass;
};

/// Per-index certificate that every frame vector has finite co-orbit norm,
/// with the explicit bound w(l) ||G||_{B(l^inf_w)}.
CoefficientBoundReport psi_coefficient_bound(const CrossGram& g);
CoefficientBoundReport psi_coefficient_bound(const DualPair& pair, const Weight& w);

struct MajorantReport {
  rvec majorant;  // m_l = bound * |G[k,l]| / w(l)
  double total;   // sum_l m_l
  double limit;   // bound * ||G|| / w(k)
  bool pass;
};

/// The l^1 majorant dominating the coefficient products of a norm-bounded
/// family against row k, with its summability certificate. The pass check is
/// done in the w(k)-scaled form, which is exact in floating point.
MajorantReport l1_majorant(const CrossGram& g, index_t k, double norm_bound);
MajorantReport l1_majorant(const DualPair& pair, const Weight& w, index_t k,
                           double norm_bound);

struct PartialSumLevel {
  std::vector<index_t> subset;
  cvec f_n;
  double hinfw_norm;       // ||C_dual f_n||_{l^inf_w}
  double cauchy_residual;  // ||C_dual (f_N - f_n)||_{l^inf_w}
};

struct PartialSumLift {
  std::vector<PartialSumLevel> levels;
  double uniform_bound;          // ||alpha||_{l^inf_w} * ||G||
  double final_match_residual;   // ||C_dual f_N - alpha||_{l^inf_w}
  bool bound_pass;               // every level within the uniform bound
  bool pass;
};

/// Lifts a fixed-point sequence alpha back to the space through nested
/// partial synthesis sums f_n = sum_{l in F_n} alpha_l psi_l, certifying the
/// uniform norm bound, the Cauchy decay of the dual-frame seminorms, and
/// that the full-level coefficients reproduce alpha.
/// Preconditions: alpha is a fixed point of G within tol, the nesting is an
/// increasing chain whose last element is the full index set.
PartialSumLift partial_sum_lift(const DualPair& pair, const Weight& w,
                                const cvec& alpha,
                                std::span<const std::vector<index_t>> nesting,
                                double tol);

/// Prefix nesting {0}, {0,1}, ..., {0..m-1}: the default chain.
std::vector<std::vector<index_t>> prefix_nesting(index_t m);

}  // namespace coorbit
