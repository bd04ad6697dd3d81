// Cayley transform, cotangent lift, Kustaanheimo-Stiefel sections and
// submersion, the two regularization composites, and the n = 2 Pauli layer.
#pragma once

#include <array>

#include "ktw/momentum.hpp"
#include "ktw/types.hpp"

namespace ktw {

// Z = (Y - iE)(-iY + E)^{-1}; unitary for hermitian Y.
Mat cayley(const Mat& y);

// Y = (Z + iE)(iZ + E)^{-1}; throws on the boundary det(iZ + E) = 0.
Mat cayley_inverse(const Mat& z);

// (Y, X) -> (Z, rho) = (cayley(Y), (i/2) (-iY + E) X (-iY + E)^+).
CotangentUn t_star_c(const CotangentHn& p);

// Factor a PSD rank-one X as zeta zeta^+; the first entry of zeta with
// modulus > tol is rotated positive real. Rank != 1 (second eigenvalue or a
// negative eigenvalue beyond tol) is a hard error. tol <= 0 picks
// 1e-8 * (1 + ||X||_F).
Vec rank_one_factor(const Mat& x, double tol = -1.0);

// KS section (Example 1): null (upsilon, zeta) with zeta != 0 maps to
//   Y = (zeta ups^+ + ups zeta^+ - Re(zeta^+ ups) E) / zeta^+ zeta,
//   X = zeta zeta^+;
// satisfies Y zeta = upsilon exactly and is U(1)-phase invariant.
CotangentHn ks_section(const TwistorVector& v);

// Alternative section (Example 2): Y = ups ups^+ / zeta^+ zeta, X = zeta zeta^+.
// Satisfies Y zeta = upsilon only where ups^+ zeta = zeta^+ zeta; kept for the
// domain study in tests, never used inside the regularization composites.
CotangentHn ks_section_alt(const TwistorVector& v);

// (Y, X) with X = zeta zeta^+ rank-one PSD maps to the twistor class of
// (Y zeta, zeta), canonicalized by canonical_phase.
TwistorVector submersion_r(const CotangentHn& p);

// KS regularization: submersion_r as a map onto anti-diagonal U(1)-classes.
TwistorVector k_reg(const CotangentHn& p);

// Cayley regularization: the same orbit point reached through T*U(n) —
// j0(t_star_c(p)) is factored back into a diagonal-realization twistor class.
// Equals change_realization(k_reg(p)) up to phase.
TwistorVector c_reg(const CotangentHn& p);

// Recover the diagonal twistor class with j_pm(v) = a (a in the rank-one
// nilpotent image, both diagonal blocks nonzero); used by c_reg.
TwistorVector j_pm_factor(const AlgebraElement& a);

// Canonical one-form on T*H(n) evaluated on a tangent vector (dY, dX):
//   gamma_0(p; dY, dX) = -Re tr(X dY).
// Its exterior differential is the symplectic form under which the library's
// Hamiltonian flows satisfy omega(X_H, .) = dH.
double one_form_hn(const CotangentHn& p, const Mat& dy);

// One-form potential of the flat symplectic structure on twistor space:
//   gamma(v; w) = -Im(v^+ phi w),
// phi taken from v's realization. Restricted to the null set it descends to
// U(1)-classes (the gauge direction iv is annihilated), and the submersion
// from rank-one cotangent points pulls gamma_0 back to it with constant 1:
// gamma(v; v_dot) = gamma_0(p; Y_dot) along curves with v(t) = submersion_r(p(t)).
double one_form_twistor(const TwistorVector& v, const Vec& w);

// a0 = tr(A)/2, a_k = tr(A sigma_k)/2 in the standard Pauli basis.
PauliVector pauli_decompose(const Mat& a);
Mat pauli_compose(const PauliVector& p);

// sigma_0..sigma_3.
Mat pauli_matrix(int k);

struct KsVectors {
  std::array<double, 3> y{}, x{};
};

// n = 2 KS transform: y = Re(zeta^+ sigma ups)/zeta^+ zeta, x = zeta^+ sigma zeta.
// x = 2 * pauli(X).v and y = pauli(Y).v for (Y, X) = ks_section(v).
KsVectors ks_transform_n2(const TwistorVector& v);

}  // namespace ktw
