#pragma once

#include "coorbit/types.hpp"

namespace coorbit {

/// Strictly positive weight on the index set {0..M-1}. Values are validated at
/// construction; a non-positive or non-finite entry is a construction error.
class Weight {
 public:
  explicit Weight(rvec values);

  static Weight constant(index_t m, double value = 1.0);

  index_t size() const { return values_.size(); }
  double operator()(index_t k) const { return values_(k); }
  const rvec& values() const { return values_; }

  double min() const { return min_; }
  double max() const { return max_; }
  /// max/min spread; > 1e8 counts as numerically degenerate (warn, proceed).
  double spread() const { return max_ / min_; }
  bool degenerate() const { return spread() > 1e8; }

 private:
  rvec values_;
  double min_ = 0.0;
  double max_ = 0.0;
};

/// Inner product, conjugate linear in the second slot: sum_i f_i * conj(g_i).
cdouble inner(const cvec& f, const cvec& g);

/// Euclidean norm (the Hilbert space norm induced by `inner`).
double norm2(const cvec& f);

/// sup_k |alpha_k| * w(k).
double linf_w_norm(const cvec& alpha, const Weight& w);

/// sum_l |alpha_l| / w(l).
double l1_inv_w_norm(const cvec& alpha, const Weight& w);

}  // namespace coorbit
