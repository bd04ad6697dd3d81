// Hermitian forms, twistor vectors, U(n,n)/u(n,n) membership, nilpotency,
// orbit normal forms and labels, and deterministic random element generation.
#pragma once

#include <cstdint>

#include "ktw/linalg.hpp"
#include "ktw/rng.hpp"
#include "ktw/types.hpp"

namespace ktw {

inline constexpr double kMembershipTol = 1e-12;  // default for membership tests
inline constexpr double kSquareZeroTol = 1e-10;  // default for nilpotency tests

// phi_d = diag(E, -E) or phi_a = [[0, -iE], [iE, 0]]; hermitian, squares to E.
HermitianForm make_form(int n, Realization realization);

// ||m^+ phi m - phi||_F <= tol * (1 + ||m||_F^2), and the residual itself.
double group_residual(const Mat& m, const HermitianForm& phi);
bool is_group_element(const Mat& m, const HermitianForm& phi,
                      double tol = kMembershipTol);

// ||m^+ phi + phi m||_F <= tol * (1 + ||m||_F^2), and the residual itself.
double algebra_residual(const Mat& m, const HermitianForm& phi);
bool is_algebra_element(const Mat& m, const HermitianForm& phi,
                        double tol = kMembershipTol);

// C = 2^{-1/2} [[E, -iE], [-iE, E]]: unitary, C^+ phi_d C = phi_a. Returned as
// a GroupElement tagged with phi_d; its membership invariant is unitarity plus
// the intertwining property, not pseudo-unitarity for either single form.
GroupElement cayley_intertwiner(int n);

// (eta, xi) = C (upsilon, zeta) and (upsilon, zeta) = C^+ (eta, xi); the round
// trip is the identity.
TwistorVector change_realization(const TwistorVector& v);

// I_pm = eta^+ eta - xi^+ xi (diagonal) or
// I_pm_tilde = i (zeta^+ upsilon - upsilon^+ zeta) (anti-diagonal).
double null_invariant(const TwistorVector& v);

// i * diag(1 x k, -1 x l, 0 x (n-k-l)); anti-hermitian.
Mat rho_normal_form(int n, int k, int l);

// Signature of -i*rho: k eigenvalues above the dead band, l below. A
// non-positive dead_band picks 1e-8 * spectral_radius(rho). Throws if rho is
// not anti-hermitian.
OrbitLabel orbit_label(const Mat& rho, double dead_band = -1.0);

struct SquareZeroResult {
  bool square_zero = false;
  int rank = 0;
  double residual = 0.0;  // ||m^2||_F / (1 + ||m||_F^2)
};
SquareZeroResult is_square_zero(const Mat& m, double tol = kSquareZeroTol);

// Stabilizer of Z = E inside U(n,n)_d, assembled from invertible F and H with
// H F^+ + F H^+ = 0:
//   A = (F + (F^+)^{-1})/2 + H,  B = (F - (F^+)^{-1})/2 - H,
//   C = (F - (F^+)^{-1})/2 + H,  D = (F + (F^+)^{-1})/2 - H.
GroupElement stabilizer_element(const Mat& f, const Mat& h);

// Deterministic per seed. Algebra elements have spectral norm <= scale; group
// elements are exponentials of such algebra elements.
AlgebraElement random_algebra_element(int n, const HermitianForm& phi,
                                      std::uint64_t seed, double scale = 1.0);
GroupElement random_group_element(int n, const HermitianForm& phi,
                                  std::uint64_t seed, double scale = 0.5);

// Rng-driven variants for sweeps.
AlgebraElement random_algebra_element(const HermitianForm& phi, Rng& rng,
                                      double scale = 1.0);
GroupElement random_group_element(const HermitianForm& phi, Rng& rng,
                                  double scale = 0.5);

// Gaussian twistor; the null variant rescales the lower block (diagonal
// realization) or reshapes through the intertwiner (anti-diagonal) so the
// null invariant vanishes exactly; nonzero by construction.
TwistorVector random_twistor(int n, Realization r, Rng& rng);
TwistorVector random_null_twistor(int n, Realization r, Rng& rng);

// Random invertible matrix with singular values in [1/sqrt(cond), sqrt(cond)].
Mat random_invertible(int n, Rng& rng, double cond = 100.0);

// Haar-ish unitary (QR of a Gaussian matrix with phase-fixed R diagonal).
Mat random_unitary(int n, Rng& rng);

}  // namespace ktw
