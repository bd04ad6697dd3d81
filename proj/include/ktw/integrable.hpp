// Integrable perturbations of the Kepler Hamiltonian: action-angle charts,
// integrability conditions, torus reduction, reduced dynamics, quadrature.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktw/dynamics.hpp"
#include "ktw/types.hpp"

namespace ktw {

// Smooth function of the 2n moduli arguments (|eta_1|^2..|eta_n|^2,
// |xi_1|^2..|xi_n|^2).
using ModuliFunction = std::function<double(const std::vector<double>&)>;

// H(v) = h0(m) + (g0(m) * prod_j eta_j^{k_j} xi_j^{l_j} + conj), where a
// negative exponent means the conjugate variable raised to |exponent|.
struct PerturbedSpec {
  int n = 0;
  ModuliFunction h0, g0;
  ExponentVector exponents;
  // Grammar sources when built by parsing (kept for reproducible output).
  std::string h0_source, g0_source;
};

// --- expression grammar ------------------------------------------------------
// Bit-exact grammar for h0/g0 sources (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?        integer >= 0
//   atom   := number | variable | '(' expr ')'
//   variable := 'm' positive-integer     (m1..m2n: the moduli arguments)
//   number := decimal floating literal (strtod syntax, no sign)
// Evaluation is left-to-right double arithmetic in the written order.
struct Expr {
  std::function<double(const std::vector<double>&)> fn;
  std::string source;
  int max_var = 0;  // highest variable index referenced
};
Expr parse_moduli_expr(const std::string& source);

ActionAngleChart make_chart(const RMat& rho);
ActionAngleChart identity_chart(int n);

// The n = 2 chart used throughout tests and the CLI 'perturbed' scenario:
// rows (1,0,0,0), (0,1,1,0), (1,1,-1,-1), (1,1,1,1) — the last two rows
// realize I_pp and I_pm.
ActionAngleChart standard_chart_n2();

double eval_h(const PerturbedSpec& spec, const TwistorVector& v);

// Moduli-squared vector m = (|eta|^2, |xi|^2) and phase vector
// phi = (arg eta, arg xi).
std::vector<double> moduli_squared(const TwistorVector& v);
std::vector<double> phases(const TwistorVector& v);

// I = rho u with u = (|eta|^2, -|xi|^2).
std::vector<double> actions(const ActionAngleChart& chart, const TwistorVector& v);

// psi = kappa^T phi, reported in [0, 2pi). Throws if any modulus vanishes.
std::vector<double> angles(const ActionAngleChart& chart, const TwistorVector& v);

// Row r passes iff sum_j rho[r][j] k_j + rho[r][n+j] l_j = delta_{r,1}
// (within tol). The sign on the l-block is fixed by the bracket
// {I_r, Phi} = sum_s rho[r][s] c_s, c = (k, l); see README for the derivation
// and the recorded discrepancy with the source convention.
std::vector<bool> check_integrability(const ActionAngleChart& chart,
                                      const ExponentVector& e, double tol = 1e-12);

// (I_2, ..., I_2n).
std::vector<double> torus_momentum(const ActionAngleChart& chart,
                                   const TwistorVector& v);

// Moduli (|eta|^2, |xi|^2) reconstructed from actions; throws
// std::domain_error if any reconstructed modulus-squared is negative
// (the (I1, c) point lies outside the admissible interval).
std::vector<double> moduli_from_actions(const ActionAngleChart& chart,
                                        const std::vector<double>& actions);

// H0(I) = h0(m(I)), G0(I) = g0(m(I))^2 * prod m_j^{|k_j|} m_{n+j}^{|l_j|};
// H_red = H0 + 2 sqrt(G0) cos(psi1), all at I = (I1, c).
double reduced_h(const PerturbedSpec& spec, const ActionAngleChart& chart,
                 double i1, double psi1, const std::vector<double>& c);

// I1_dot = 2 sqrt(G0) sin psi1 (analytic);
// psi1_dot = dH_red/dI1 by central differences in I1
//          (= dH0/dI1 + (dG0/dI1 / sqrt(G0)) cos psi1).
struct ReducedField {
  double i1_dot = 0.0, psi1_dot = 0.0;
};
ReducedField reduced_field(const PerturbedSpec& spec, const ActionAngleChart& chart,
                           double i1, double psi1, const std::vector<double>& c);

// Integrates (dI1/dt)^2 = 4 G0 - (E - H0)^2 with E = H_red at the start;
// sign from sin(psi1_0), flipped at turning points located by bisection on
// the radicand. Returns samples at multiples of dt up to t_end.
struct QuadratureResult {
  std::vector<double> times, i1;
};
QuadratureResult quadrature_solve(const PerturbedSpec& spec,
                                  const ActionAngleChart& chart, double i1_0,
                                  double psi1_0, const std::vector<double>& c,
                                  double t_end, double dt);

// Reduction of eval_h to conserved-matrix data: h0, g0 evaluated on the
// diagonals of N^-, N^+, the monomial on their off-diagonal entries.
// Requires the exponent multiset to be closed under negation.
double eval_h_tilde(const CotangentHn& p, const PerturbedSpec& spec);

// n = 2 closed form: with M± = M1 ± i M2, R± = R1 ± i R2 from mr_vectors_n2,
//   H = htilde0(R0, R3, M0, M3) + gtilde0(R0, R3, M0, M3) *
//       ((R_s - M_s)^k (R_s' + M_s')^l + (R_-s - M_-s)^k (R_-s' + M_-s')^l),
// where s = sigma, s' = sigma_prime in {+1, -1} and k, l >= 0.
using MrFunction = std::function<double(double, double, double, double)>;
double eval_h_tilde_n2(const std::array<double, 3>& y,
                       const std::array<double, 3>& x, const MrFunction& htilde0,
                       const MrFunction& gtilde0, int k, int l, int sigma,
                       int sigma_prime);

}  // namespace ktw
