#include "coorbit/hilbert.hpp"

#include <cmath>

namespace coorbit {

Weight::Weight(rvec values) : values_(std::move(values)) {
  if (values_.size() < 1) throw spec_error("Weight: empty index set");
  if (!values_.allFinite()) throw spec_error("Weight: non-finite value");
  min_ = values_.minCoeff();
  max_ = values_.maxCoeff();
  if (min_ <= 0.0) throw spec_error("Weight: values must be strictly positive");
}

Weight Weight::constant(index_t m, double value) {
  return Weight(rvec::Constant(m, value));
}

cdouble inner(const cvec& f, const cvec& g) {
  detail::require_same_size(f, g, "inner");
  // Eigen's dot() conjugates the first argument; the convention here
  // conjugates the second.
  return g.dot(f);
}

double norm2(const cvec& f) { return f.norm(); }

double linf_w_norm(const cvec& alpha, const Weight& w) {
  if (alpha.size() != w.size())
    throw dimension_error("linf_w_norm: sequence/weight length mismatch");
  double sup = 0.0;
  for (index_t k = 0; k < alpha.size(); ++k)
    sup = std::max(sup, std::abs(alpha(k)) * w(k));
  return sup;
}

double l1_inv_w_norm(const cvec& alpha, const Weight& w) {
  if (alpha.size() != w.size())
    throw dimension_error("l1_inv_w_norm: sequence/weight length mismatch");
  double total = 0.0;
  for (index_t l = 0; l < alpha.size(); ++l) total += std::abs(alpha(l)) / w(l);
  return total;
}

}  // namespace coorbit
