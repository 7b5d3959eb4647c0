#pragma once

#include "coorbit/hilbert.hpp"
#include "coorbit/types.hpp"

namespace coorbit {

/// Finite frame for C^d: the columns of a d x M array. Construction enforces
/// the finite-dimensional frame condition (M >= d and the columns span C^d,
/// i.e. the smallest singular value is positive).
class Frame {
 public:
  explicit Frame(cmat vectors);

  index_t dim() const { return vectors_.rows(); }
  index_t size() const { return vectors_.cols(); }
  const cmat& vectors() const { return vectors_; }
  cvec vector(index_t k) const { return vectors_.col(k); }

 private:
  cmat vectors_;
};

/// A primal/dual frame pair with matching shapes. Only shapes are checked
/// here; whether the pair actually satisfies the reconstruction identity is
/// the job of verify_dual, so that deliberately corrupted pairs can be built
/// and diagnosed.
struct DualPair {
  Frame primal;
  Frame dual;

  DualPair(Frame primal_frame, Frame dual_frame);

  index_t dim() const { return primal.dim(); }
  index_t size() const { return primal.size(); }
};

/// Coefficient operator: (C f)_k = <f, psi_k>.
cvec analysis(const Frame& frame, const cvec& f);

/// Synthesis operator: D c = sum_k c_k psi_k.
cvec synthesis(const Frame& frame, const cvec& coeff);

/// Frame operator S = D C = sum_k psi_k psi_k^*.
cmat frame_operator(const Frame& frame);

struct FrameBounds {
  double lower;  // A: smallest eigenvalue of S
  double upper;  // B: largest eigenvalue of S
};

/// Optimal frame bounds, i.e. the extreme eigenvalues of the frame operator.
FrameBounds frame_bounds(const Frame& frame);

/// Canonical dual frame S^{-1} psi_k, applied through a Hermitian
/// positive-definite factorization. Refuses frames with cond(S) > 1e12.
Frame canonical_dual(const Frame& frame);

/// Convenience: (psi, canonical_dual(psi)).
DualPair canonical_pair(const Frame& frame);

struct DualityReport {
  double primal_residual;  // ||D_psi C_dual - I||_2
  double dual_residual;    // ||D_dual C_psi - I||_2
  double tolerance;
  bool pass;

  double max_residual() const {
    return primal_residual > dual_residual ? primal_residual : dual_residual;
  }
};

/// Checks both reconstruction identities of the pair in operator 2-norm.
DualityReport verify_dual(const DualPair& pair, double tol);

/// Largest singular value. Computed as sqrt of the top eigenvalue of A^H A,
/// which stays accurate for residual-sized inputs.
double operator_norm(const cmat& a);

/// The three unit vectors of the plane at 120 degrees: the smallest
/// nontrivial tight frame, handy as an exact test fixture.
Frame mercedes_frame();

}  // namespace coorbit
