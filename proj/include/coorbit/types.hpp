#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace coorbit {

using cdouble = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;
using index_t = Eigen::Index;

/// Vector in the ambient space C^d.
using ComplexVector = cvec;
/// Coefficient sequence indexed by {0..M-1}.
using CoefficientSeq = cvec;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or index ranges do not match.
class dimension_error : public error {
 public:
  using error::error;
};

/// Invalid construction parameters (specs, configs, weights).
class spec_error : public error {
 public:
  using error::error;
};

/// A matrix is too close to singular for the requested operation.
class conditioning_error : public error {
 public:
  using error::error;
};

/// A structural invariant that should hold by construction failed.
class consistency_error : public error {
 public:
  using error::error;
};

/// A documented caller-side precondition failed.
class precondition_error : public error {
 public:
  using error::error;
};

namespace detail {

inline void require_same_size(const cvec& a, const cvec& b, const char* what) {
  if (a.size() != b.size())
    throw dimension_error(std::string(what) + ": length mismatch (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
}

inline void require_finite(const cvec& v, const char* what) {
  if (!v.allFinite()) throw spec_error(std::string(what) + ": non-finite entry");
}

inline void require_finite(const cmat& m, const char* what) {
  if (!m.allFinite()) throw spec_error(std::string(what) + ": non-finite entry");
}

}  // namespace detail

}  // namespace coorbit
