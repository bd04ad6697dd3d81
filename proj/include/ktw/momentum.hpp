// The four momentum maps, the group actions on each Hamiltonian space,
// linear functionals on the algebra, and Poisson brackets.
#pragma once

#include <functional>

#include "ktw/twistor_core.hpp"
#include "ktw/types.hpp"

namespace ktw {

// j_pm(eta, xi) = i [[-eta eta^+, eta xi^+], [-xi eta^+, xi xi^+]]; algebra
// element for phi_d. Satisfies j^2 = conventions::quad_identity_c * I_pm * j.
AlgebraElement j_pm(const TwistorVector& v);

// j_pm_tilde(upsilon, zeta) =
//   [[upsilon zeta^+, -upsilon upsilon^+], [zeta zeta^+, -zeta upsilon^+]];
// algebra element for phi_a, same quadratic identity.
AlgebraElement j_pm_tilde(const TwistorVector& v);

// j0(Z, rho) = [[-Z rho Z^+, Z rho], [(Z rho)^+, rho]]; phi_d; square zero.
AlgebraElement j0(const CotangentUn& p);

// j0_tilde(Y, X) = [[YX, -YXY], [X, -XY]]; phi_a; square zero.
AlgebraElement j0_tilde(const CotangentHn& p);

// Fractional action Z' = (AZ + B)(CZ + D)^{-1} of U(n,n)_d on U(n).
// Throws if CZ + D is singular (action undefined there).
Mat act_on_un(const GroupElement& g, const Mat& z);

// Cotangent lift: (Z, rho) -> (act_on_un(g, Z), (CZ+D) rho (CZ+D)^+).
CotangentUn act_lambda(const GroupElement& g, const CotangentUn& p);

// Anti-diagonal action on T*H(n), defined where CY + D is invertible:
//   Y' = (AY + B)(CY + D)^{-1},  X' = (CY + D) X (CY + D)^+.
CotangentHn act_sigma_tilde(const GroupElement& g, const CotangentHn& p);

// Ad_g(a) = g a g^{-1}.
Mat ad(const Mat& g, const Mat& a);

// Generators used by the pinned pairing table (see conventions.hpp).
AlgebraElement gen_pp(int n);        // i diag(E, E), phi_d
AlgebraElement gen_pm(int n);        // i diag(E, -E), phi_d
AlgebraElement gen_pm_tilde(int n);  // [[0, E], [-E, 0]], phi_a

LinearFunctional make_linear(const AlgebraElement& gen);

// L_X(A) = Re tr(X A); real for both arguments in u(n,n).
double linear_functional_eval(const LinearFunctional& l, const AlgebraElement& a);
double linear_functional_eval(const LinearFunctional& l, const Mat& a);

// Generator commutator [X1, X2]; pointwise equal to the Lie-Poisson bracket
// of the two linear functionals.
LinearFunctional bracket_of_linear(const LinearFunctional& l1,
                                   const LinearFunctional& l2);

// Lie-Poisson bracket of linear functionals evaluated at A via the expanded
// block-partial formula (independent of bracket_of_linear's commutator route).
double lie_poisson_linear(const LinearFunctional& l1, const LinearFunctional& l2,
                          const AlgebraElement& a);

using FlatObservable = std::function<double(const TwistorVector&)>;

// Central-difference Poisson bracket on C^2n for the flat symplectic
// structure: {f, g} = sum_j -i (f_{eta_j} g_{conj eta_j} - g_{eta_j} f_{conj eta_j})
//                        + i (f_{xi_j} g_{conj xi_j} - g_{xi_j} f_{conj xi_j})
// in Wirtinger partials, matching the sign convention under which the flow of
// I_pm is v -> e^{it} v. Step h <= 0 picks 1e-6 (1 + ||v||).
double poisson_bracket_flat(const FlatObservable& f, const FlatObservable& g,
                            const TwistorVector& v, double h = -1.0);

// Hamiltonian field of f at v for the same structure:
//   eta_dot_j = +i f_{conj eta_j},  xi_dot_j = -i f_{conj xi_j}.
Vec flat_hamiltonian_field(const FlatObservable& f, const TwistorVector& v,
                           double h = -1.0);

// Named observables.
double obs_i_pp(const TwistorVector& v);        // eta^+ eta + xi^+ xi (diagonal)
double obs_i_pp_tilde(const TwistorVector& v);  // upsilon^+ upsilon + zeta^+ zeta
double obs_i0(const CotangentUn& p);            // -2i tr(rho)
double obs_i0_tilde(const CotangentHn& p);      // tr(X (E + Y^2))

}  // namespace ktw
