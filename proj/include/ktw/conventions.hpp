// Sign and scale conventions pinned by exact small-n algebra, frozen here and
// enforced by tests. None of these are tuning knobs: changing any entry is a
// semantic change that the test-suite is designed to catch.
#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace ktw::conventions {

// --- forms and intertwiner ------------------------------------------------
// phi_d = [[E,0],[0,-E]], phi_a = [[0,-iE],[iE,0]],
// C = 2^{-1/2} [[E,-iE],[-iE,E]];  C^+ phi_d C = phi_a exactly, and
// C^2 = -i * (block swap).

// --- quadratic identity ----------------------------------------------------
// J(v)^2 = quad_identity_c * I_pm(v) * J(v) in both realizations.
inline constexpr std::complex<double> quad_identity_c{0.0, -1.0};

// --- trace pairing L_X(A) = tr(X A) against the null momentum maps ---------
// Diagonal generators  X_pp = i*diag(E,E), X_pm = i*diag(E,-E):
//   L_{X_pp} o j_pm = +I_pm,  L_{X_pm} o j_pm = +I_pp,
//   L_{X_pm} o j_0  = +I_0,   L_{X_pp} o j_0  = 0.
// Anti-diagonal flow generator X_pm_tilde := C^+ X_pm C = [[0,E],[-E,0]]:
//   L_{X_pm_tilde} o j_pm_tilde = +I_pp_tilde,
//   L_{X_pm_tilde} o j_0_tilde  = +I_0_tilde.
// (The conjugate the other way, C X_pm C^+ = [[0,-E],[E,0]], pairs with the
// NEGATIVE invariants because C^2 = -i * swap.)
inline constexpr double pairing_sign = 1.0;

// --- Hamiltonian conventions ------------------------------------------------
// Flows are f_dot = {H, f}. On T*H(n) with one-form -tr(X dY):
//   Y_dot = grad_X H,  X_dot = -grad_Y H  (matrix gradients, tr pairing).
// For H = I_0_tilde = tr(X (E + Y^2)):
//   Y_dot = E + Y^2,   X_dot = -(X Y + Y X)   (anticommutator).
// The group flow is exp(t X_pm_tilde) = [[cos t E, sin t E],[-sin t E, cos t E]];
// it is 2pi-periodic on the group and pi-periodic on T*H(n).
// On flat C^2n: eta_dot_j = +i dH/d(conj eta_j), xi_dot_j = -i dH/d(conj xi_j).

// --- KS / Pauli conventions (n = 2) -----------------------------------------
// Standard Pauli basis (sigma_2 = [[0,-i],[i,0]]); scalar part s = tr(A)/2.
// KS vectors: x_ks = zeta^+ sigma zeta = 2 * pauli(X).v on the rank-one cone,
// y_ks = pauli(Y).v on the y0 = 0 section; |x_ks| = zeta^+ zeta there.
inline constexpr double ks_vector_scale = 2.0;  // x_ks = 2 * pauli(X).v
// Energy: |x_ks| (1 + y_ks^2) = I_0_tilde exactly (pinned multiple 1).
inline constexpr double kepler_h0_multiple = 1.0;
// mr_vectors_n2 returns tr/2-Pauli components of M = i[X,Y], R = X + YXY:
//   M0 = 0, M = y_ks x x_ks, R0 = |x_ks|(1+y^2)/2,
//   R = ((1-y^2) x_ks + 2 (x_ks . y) y)/2;
// i.e. the doubled textbook vectors 2 y x x, (1-y^2) x + 2 (x.y) y equal
// mr_formula_scale * (returned components).
inline constexpr double mr_formula_scale = 2.0;
// N^- = eta eta^+, N^+ = xi xi^+ along C o k_reg (constant exactly 1).
inline constexpr double n_pm_scale = 1.0;

// --- action-angle conventions ------------------------------------------------
// Moduli coordinates u = (|eta_1|^2..|eta_n|^2, -|xi_1|^2..-|xi_n|^2) and
// phases phi = (arg eta, arg xi) satisfy {u_s, phi_t} = delta_st.
// Actions I = rho u, angles psi = rho^{-T} phi. A chart row r conserves the
// perturbation with exponents (k, l) iff
//   sum_j rho[r][j] k_j + rho[r][n+j] l_j = delta_{r,1}.
inline constexpr double integrability_row_target_r1 = 1.0;

std::string table_text();
std::uint64_t table_hash();  // FNV-1a 64 of table_text()

}  // namespace ktw::conventions
