// Regularized Kepler flow: Hamiltonian field of I_0_tilde, closed-form and
// RK4 flows, conserved matrices M and R, and the n = 2 Kepler layer.
#pragma once

#include <functional>
#include <vector>

#include "ktw/regularize.hpp"
#include "ktw/types.hpp"

namespace ktw {

// (Y_dot, X_dot) = (E + Y^2, -(XY + YX)): the Hamiltonian field of
// I_0_tilde = tr(X(E + Y^2)) for omega = d(-tr(X dY)).
CotangentHn hamiltonian_field(const CotangentHn& p);

// Finite-difference Hamiltonian field of an arbitrary H(Y, X) for the same
// symplectic structure: Y_dot = grad_X H, X_dot = -grad_Y H (tr pairing),
// by central differences over an orthonormal basis of H(n). h <= 0 picks
// 1e-6 (1 + ||Y|| + ||X||).
using HnObservable = std::function<double(const CotangentHn&)>;
CotangentHn fd_hamiltonian_field(const HnObservable& h, const CotangentHn& p,
                                 double step = -1.0);

// g(t) = [[cos t E, sin t E], [-sin t E, cos t E]] in U(n,n)_a; its sigma_tilde
// action solves the Riccati pair. pi-periodic on T*H(n).
GroupElement group_flow_element(int n, double t);
CotangentHn flow_closed_form(const CotangentHn& p, double t);

// (eta, xi) -> (e^{it} eta, e^{-it} xi): the flow of I_pp on C^2n.
TwistorVector flow_linear(const TwistorVector& v, double t);

// Classic fixed-step RK4 over a flattened real state vector.
using RealField = std::function<RVec(const RVec&)>;
struct Trajectory {
  std::vector<double> times;
  std::vector<RVec> states;
  // One row per sample of whatever invariants the caller logs.
  std::vector<std::vector<double>> invariants;
  std::vector<std::string> invariant_names;
};
Trajectory integrate_rk4(
    const RealField& field, const RVec& state0, double t_end, double dt,
    const std::function<std::vector<double>(const RVec&)>& log = nullptr,
    const std::vector<std::string>& log_names = {});

// Flatten/unflatten helpers shared by integrators and the CLI.
RVec pack_hn(const CotangentHn& p);
CotangentHn unpack_hn(const RVec& s, int n);
RVec pack_twistor(const TwistorVector& v);
TwistorVector unpack_twistor(const RVec& s, int n, Realization r);

// M = i[X, Y], R = X + YXY; both hermitian, both conserved by the flow.
void integrals_mr(const CotangentHn& p, Mat& m_out, Mat& r_out);

// N± = (R ± M)/2. Through the regularization maps, N^- = eta eta^+ and
// N^+ = xi xi^+ of the diagonal-realization image (constant exactly 1).
void n_plus_minus(const CotangentHn& p, Mat& n_plus, Mat& n_minus);

// H0 = |x| (1 + y^2); equals I_0_tilde of the KS-corresponding point.
double kepler_h0_n2(const std::array<double, 3>& y,
                    const std::array<double, 3>& x);

// Physical time t(s) = integral of |x(s)| ds (trapezoid rule) for a
// trajectory of n = 2 CotangentHn states packed by pack_hn.
std::vector<double> fictitious_to_physical(const Trajectory& traj);

struct MrVectors {
  double m0 = 0.0, r0 = 0.0;
  std::array<double, 3> m{}, r{};
};

// tr/2-Pauli components of M and R on the KS section:
//   M0 = 0, M = y x x, R0 = |x|(1 + y^2)/2, R = ((1 - y^2) x + 2 (x.y) y)/2.
// The doubled vectors 2 y x x and (1-y^2) x + 2 (x.y) y equal
// conventions::mr_formula_scale times these.
MrVectors mr_vectors_n2(const std::array<double, 3>& y,
                        const std::array<double, 3>& x);

}  // namespace ktw
