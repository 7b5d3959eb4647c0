#include "coorbit/frame.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace coorbit {

namespace {

constexpr double kMaxCondition = 1e12;

Eigen::SelfAdjointEigenSolver<cmat> frame_operator_eigen(const Frame& frame) {
  Eigen::SelfAdjointEigenSolver<cmat> solver(frame_operator(frame),
                                             Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw error("frame_bounds: eigensolver failed");
  return solver;
}

}  // namespace

Frame::Frame(cmat vectors) : vectors_(std::move(vectors)) {
  const index_t d = vectors_.rows();
  const index_t m = vectors_.cols();
  if (d < 1) throw dimension_error("Frame: ambient dimension must be >= 1");
  if (m < d)
    throw spec_error("Frame: family of size " + std::to_string(m) +
                     " cannot span C^" + std::to_string(d));
  detail::require_finite(vectors_, "Frame");
  // Spanning check through the frame operator: A = lambda_min(S) = sigma_min^2.
  Eigen::SelfAdjointEigenSolver<cmat> solver(vectors_ * vectors_.adjoint(),
                                             Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw error("Frame: spanning check failed to converge");
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (!(lo > hi * 1e-24) || !(lo > 0.0))
    throw spec_error("Frame: columns do not span the ambient space");
}

DualPair::DualPair(Frame primal_frame, Frame dual_frame)
    : primal(std::move(primal_frame)), dual(std::move(dual_frame)) {
  if (primal.dim() != dual.dim() || primal.size() != dual.size())
    throw dimension_error("DualPair: primal and dual shapes differ");
}

cvec analysis(const Frame& frame, const cvec& f) {
  if (f.size() != frame.dim())
    throw dimension_error("analysis: vector length != frame dimension");
  return frame.vectors().adjoint() * f;
}

cvec synthesis(const Frame& frame, const cvec& coeff) {
  if (coeff.size() != frame.size())
    throw dimension_error("synthesis: coefficient length != frame size");
  return frame.vectors() * coeff;
}

cmat frame_operator(const Frame& frame) {
  return frame.vectors() * frame.vectors().adjoint();
}

FrameBounds frame_bounds(const Frame& frame) {
  const auto solver = frame_operator_eigen(frame);
  return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

Frame canonical_dual(const Frame& frame) {
  const auto bounds = frame_bounds(frame);
  if (!(bounds.lower > 0.0) || bounds.upper / bounds.lower > kMaxCondition)
    throw conditioning_error(
        "canonical_dual: frame operator condition number exceeds 1e12");
  const Eigen::LLT<cmat> llt(frame_operator(frame));
  if (llt.info() != Eigen::Success)
    throw conditioning_error("canonical_dual: Cholesky factorization failed");
  return Frame(llt.solve(frame.vectors()));
}

DualPair canonical_pair(const Frame& frame) {
  return DualPair(frame, canonical_dual(frame));
}

DualityReport verify_dual(const DualPair& pair, double tol) {
  const cmat eye = cmat::Identity(pair.dim(), pair.dim());
  // D_psi C_dual = Psi * DualPsi^H on C^d.
  const double primal_res =
      operator_norm(pair.primal.vectors() * pair.dual.vectors().adjoint() - eye);
  const double dual_res =
      operator_norm(pair.dual.vectors() * pair.primal.vectors().adjoint() - eye);
  const bool pass = primal_res <= tol && dual_res <= tol;
  return {primal_res, dual_res, tol, pass};
}

double operator_norm(const cmat& a) {
  if (a.size() == 0) return 0.0;
  // Normalize the scale first: residual-sized inputs otherwise underflow in
  // the eigensolver's iteration.
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  const cmat b = a / scale;
  Eigen::SelfAdjointEigenSolver<cmat> solver(b.adjoint() * b,
                                             Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw error("operator_norm: eigensolver failed");
  const double top = solver.eigenvalues().maxCoeff();
  return top > 0.0 ? scale * std::sqrt(top) : 0.0;
}

Frame mercedes_frame() {
  const double h = std::sqrt(3.0) / 2.0;
  cmat m(2, 3);
  m << cdouble(0, 0), cdouble(-h, 0), cdouble(h, 0),
       cdouble(1, 0), cdouble(-0.5, 0), cdouble(-0.5, 0);
  return Frame(m);
}

}  // namespace coorbit
