// Dense linear-algebra helpers: residual conventions, matrix exponential,
// rank decisions, phase-class distance.
#pragma once

#include "ktw/types.hpp"

namespace ktw {

// Relative Frobenius residual used throughout:
//   residual(A, B) = ||A - B||_F / (1 + max(||A||_F, ||B||_F)).
template <typename DerivedA, typename DerivedB>
double rel_residual(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

// ||M||_F / (1 + ||Ref||_F) for one-sided checks (M should vanish).
template <typename Derived>
double rel_norm(const Eigen::MatrixBase<Derived>& m, double ref_norm) {
  return m.norm() / (1.0 + ref_norm);
}

// Matrix exponential by Pade approximation with scaling and squaring
// (orders 3/5/7/9/13, switching on the 1-norm). Backward error below
// ~1e-13 relative for any input; exact on the zero matrix.
Mat expm(const Mat& a);

// Number of singular values above tol * largest; tol <= 0 picks
// 1e-10 * max(1, ||m||_F).
int numeric_rank(const Mat& m, double tol = -1.0);

// min over phases theta of || e^{i theta} u - w ||_2
// (= sqrt(||u||^2 + ||w||^2 - 2 |<w, u>|)).
double phase_class_distance(const Vec& u, const Vec& w);
double phase_class_distance(const TwistorVector& u, const TwistorVector& w);

// Rotate v by the global phase that makes its anchor entry positive real:
// the largest-modulus entry of the lower block when that block is nonzero,
// otherwise of the upper block. Ties broken by lowest index.
TwistorVector canonical_phase(const TwistorVector& v);

}  // namespace ktw
