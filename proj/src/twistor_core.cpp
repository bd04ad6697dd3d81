#include "ktw/twistor_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "ktw/conventions.hpp"

namespace ktw {

// --- matrix exponential ------------------------------------------------------

namespace {

// Pade numerator coefficients for degrees 3..13 (denominator shares them with
// alternating signs through the U/V split).
const double kPade3[] = {120, 60, 12, 1};
const double kPade5[] = {30240, 15120, 3360, 420, 30, 1};
const double kPade7[] = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
const double kPade9[] = {17643225600., 8821612800., 2075673600., 302702400.,
                         30270240.,    2162160.,    110880.,     3960.,
                         90.,          1.};
const double kPade13[] = {64764752532480000., 32382376266240000.,
                          7771770303897600.,  1187353796428800.,
                          129060195264000.,   10559470521600.,
                          670442572800.,      33522128640.,
                          1323241920.,        40840800.,
                          960960.,            16380.,
                          182.,               1.};

// 1-norm thresholds below which each degree meets double-precision backward
// error (Higham 2005 values).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

void pade_uv_low(const Mat& a, const double* b, int degree, Mat& u, Mat& v) {
  const int n = a.rows();
  const Mat a2 = a * a;
  Mat even = b[0] * Mat::Identity(n, n);
  Mat odd = b[1] * Mat::Identity(n, n);
  Mat pow = Mat::Identity(n, n);
  for (int k = 2; k <= degree; k += 2) {
    pow = pow * a2;  // a^k
    even += b[k] * pow;
    if (k + 1 <= degree) odd += b[k + 1] * pow;
  }
  u = a * odd;
  v = even;
}

void pade_uv_13(const Mat& a, Mat& u, Mat& v) {
  const int n = a.rows();
  const double* b = kPade13;
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a2 * a4;
  const Mat id = Mat::Identity(n, n);
  u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
      b[2] * a2 + b[0] * id;
}

}  // namespace

Mat expm(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: square input required");
  const double l1 = a.cwiseAbs().colwise().sum().maxCoeff();
  Mat u, v;
  int squarings = 0;
  if (l1 <= kTheta3) {
    pade_uv_low(a, kPade3, 3, u, v);
  } else if (l1 <= kTheta5) {
    pade_uv_low(a, kPade5, 5, u, v);
  } else if (l1 <= kTheta7) {
    pade_uv_low(a, kPade7, 7, u, v);
  } else if (l1 <= kTheta9) {
    pade_uv_low(a, kPade9, 9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(l1 / kTheta13))));
    const Mat scaled = a / std::pow(2.0, squarings);
    pade_uv_13(scaled, u, v);
  }
  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

int numeric_rank(const Mat& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double eff = tol > 0.0 ? tol : 1e-10 * std::max(1.0, m.norm());
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > eff * std::max(1.0, s(0))) ++r;
  return r;
}

double phase_class_distance(const Vec& u, const Vec& w) {
  // Rotate u by the minimizing phase and subtract; the closed-form
  // sqrt(|u|^2 + |w|^2 - 2 |<w,u>|) loses half the digits to cancellation
  // when the classes are close.
  const cplx overlap = u.dot(w);
  const cplx phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1, 0);
  return (phase * u - w).norm();
}

double phase_class_distance(const TwistorVector& u, const TwistorVector& w) {
  return phase_class_distance(u.stacked(), w.stacked());
}

TwistorVector canonical_phase(const TwistorVector& v) {
  const Vec s = v.stacked();
  int anchor = -1;
  double best = 0.0;
  // Prefer the lower block; fall back to the upper one if the lower vanishes.
  for (int i = v.n; i < 2 * v.n; ++i)
    if (std::abs(s(i)) > best) best = std::abs(s(i)), anchor = i;
  if (anchor < 0 || best == 0.0) {
    for (int i = 0; i < v.n; ++i)
      if (std::abs(s(i)) > best) best = std::abs(s(i)), anchor = i;
  }
  if (anchor < 0 || best == 0.0) return v;  // zero vector: nothing to fix
  const cplx phase = std::conj(s(anchor)) / std::abs(s(anchor));
  return TwistorVector::from_stacked(v.n, v.realization, (phase * s).eval());
}

// --- forms, membership, intertwiner -----------------------------------------

HermitianForm make_form(int n, Realization realization) {
  if (n < 1) throw std::invalid_argument("make_form: n must be >= 1");
  HermitianForm f;
  f.n = n;
  f.realization = realization;
  f.m = Mat::Zero(2 * n, 2 * n);
  if (realization == Realization::diagonal) {
    f.m.topLeftCorner(n, n) = Mat::Identity(n, n);
    f.m.bottomRightCorner(n, n) = -Mat::Identity(n, n);
  } else {
    f.m.topRightCorner(n, n) = cplx(0, -1) * Mat::Identity(n, n);
    f.m.bottomLeftCorner(n, n) = cplx(0, 1) * Mat::Identity(n, n);
  }
  return f;
}

double group_residual(const Mat& m, const HermitianForm& phi) {
  if (m.rows() != 2 * phi.n || m.cols() != 2 * phi.n)
    throw std::invalid_argument("group_residual: dimension mismatch");
  return (m.adjoint() * phi.m * m - phi.m).norm() / (1.0 + m.squaredNorm());
}

bool is_group_element(const Mat& m, const HermitianForm& phi, double tol) {
  return group_residual(m, phi) <= tol;
}

double algebra_residual(const Mat& m, const HermitianForm& phi) {
  if (m.rows() != 2 * phi.n || m.cols() != 2 * phi.n)
    throw std::invalid_argument("algebra_residual: dimension mismatch");
  return (m.adjoint() * phi.m + phi.m * m).norm() / (1.0 + m.squaredNorm());
}

bool is_algebra_element(const Mat& m, const HermitianForm& phi, double tol) {
  return algebra_residual(m, phi) <= tol;
}

GroupElement cayley_intertwiner(int n) {
  if (n < 1) throw std::invalid_argument("cayley_intertwiner: n must be >= 1");
  const double s = 1.0 / std::sqrt(2.0);
  Mat c = Mat::Zero(2 * n, 2 * n);
  c.topLeftCorner(n, n) = s * Mat::Identity(n, n);
  c.topRightCorner(n, n) = cplx(0, -s) * Mat::Identity(n, n);
  c.bottomLeftCorner(n, n) = cplx(0, -s) * Mat::Identity(n, n);
  c.bottomRightCorner(n, n) = s * Mat::Identity(n, n);
  return GroupElement{make_form(n, Realization::diagonal), c};
}

TwistorVector change_realization(const TwistorVector& v) {
  const Mat c = cayley_intertwiner(v.n).m;
  if (v.realization == Realization::antidiagonal)
    return TwistorVector::from_stacked(v.n, Realization::diagonal,
                                       (c * v.stacked()).eval());
  return TwistorVector::from_stacked(v.n, Realization::antidiagonal,
                                     (c.adjoint() * v.stacked()).eval());
}

double null_invariant(const TwistorVector& v) {
  if (v.realization == Realization::diagonal)
    return v.upper.squaredNorm() - v.lower.squaredNorm();
  // i (zeta^+ upsilon - upsilon^+ zeta) = -2 Im(zeta^+ upsilon)
  return -2.0 * std::imag(v.lower.dot(v.upper));
}

// --- orbit data ---------------------------------------------------------------

Mat rho_normal_form(int n, int k, int l) {
  if (k < 0 || l < 0 || k + l > n)
    throw std::invalid_argument("rho_normal_form: need k, l >= 0 and k + l <= n");
  Mat rho = Mat::Zero(n, n);
  for (int i = 0; i < k; ++i) rho(i, i) = cplx(0, 1);
  for (int i = k; i < k + l; ++i) rho(i, i) = cplx(0, -1);
  return rho;
}

OrbitLabel orbit_label(const Mat& rho, double dead_band) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("orbit_label: square input required");
  if ((rho.adjoint() + rho).norm() > 1e-10 * (1.0 + rho.norm()))
    throw std::invalid_argument("orbit_label: input is not anti-hermitian");
  const Mat h = cplx(0, -1) * rho;  // hermitian
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint().eval()),
                                        Eigen::EigenvaluesOnly);
  const RVec ev = es.eigenvalues();
  const double radius = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  const double band = dead_band > 0.0 ? dead_band : 1e-8 * radius;
  OrbitLabel lab;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > band) ++lab.k;
    else if (ev(i) < -band) ++lab.l;
  }
  return lab;
}

SquareZeroResult is_square_zero(const Mat& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("is_square_zero: square input required");
  SquareZeroResult r;
  r.residual = (m * m).norm() / (1.0 + m.squaredNorm());
  r.square_zero = r.residual <= tol;
  r.rank = numeric_rank(m, tol);
  return r;
}

GroupElement stabilizer_element(const Mat& f, const Mat& h) {
  const int n = f.rows();
  if (f.cols() != n || h.rows() != n || h.cols() != n)
    throw std::invalid_argument("stabilizer_element: dimension mismatch");
  Eigen::FullPivLU<Mat> lu(f);
  if (!lu.isInvertible())
    throw std::invalid_argument("stabilizer_element: F is singular");
  const double cstr = (h * f.adjoint() + f * h.adjoint()).norm();
  if (cstr > 1e-10 * (1.0 + f.norm() * h.norm()))
    throw std::invalid_argument(
        "stabilizer_element: constraint H F^+ + F H^+ = 0 violated");
  const Mat finv_adj = lu.inverse().adjoint();  // (F^+)^{-1}
  const Mat p = 0.5 * (f + finv_adj);
  const Mat q = 0.5 * (f - finv_adj);
  GroupElement g{make_form(n, Realization::diagonal), Mat::Zero(2 * n, 2 * n)};
  g.m.topLeftCorner(n, n) = p + h;
  g.m.topRightCorner(n, n) = q - h;
  g.m.bottomLeftCorner(n, n) = q + h;
  g.m.bottomRightCorner(n, n) = p - h;
  return g;
}

// --- random generation ---------------------------------------------------------

AlgebraElement random_algebra_element(const HermitianForm& phi, Rng& rng,
                                      double scale) {
  if (scale <= 0.0)
    throw std::invalid_argument("random_algebra_element: scale must be > 0");
  const int n2 = 2 * phi.n;
  const Mat g = rng.cnormal_mat(n2, n2);
  // Project onto the algebra: m -> (m - phi m^+ phi)/2 (uses phi^2 = E).
  Mat m = 0.5 * (g - phi.m * g.adjoint() * phi.m);
  Eigen::JacobiSVD<Mat> svd(m);
  const double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  if (top > scale) m *= scale / top;
  return AlgebraElement{phi, m};
}

GroupElement random_group_element(const HermitianForm& phi, Rng& rng,
                                  double scale) {
  return GroupElement{phi, expm(random_algebra_element(phi, rng, scale).m)};
}

AlgebraElement random_algebra_element(int n, const HermitianForm& phi,
                                      std::uint64_t seed, double scale) {
  (void)n;
  Rng rng(seed);
  return random_algebra_element(phi, rng, scale);
}

GroupElement random_group_element(int n, const HermitianForm& phi,
                                  std::uint64_t seed, double scale) {
  (void)n;
  Rng rng(seed);
  return random_group_element(phi, rng, scale);
}

TwistorVector random_twistor(int n, Realization r, Rng& rng) {
  TwistorVector v;
  v.n = n;
  v.realization = r;
  v.upper = rng.cnormal_vec(n);
  v.lower = rng.cnormal_vec(n);
  return v;
}

TwistorVector random_null_twistor(int n, Realization r, Rng& rng) {
  // Build an exactly-null diagonal sample (rescale xi to eta's norm), then
  // move it through the intertwiner if the anti-diagonal realization is asked
  // for; the invariant is preserved up to rounding.
  TwistorVector v;
  v.n = n;
  v.realization = Realization::diagonal;
  do {
    v.upper = rng.cnormal_vec(n);
  } while (v.upper.norm() < 1e-8);
  do {
    v.lower = rng.cnormal_vec(n);
  } while (v.lower.norm() < 1e-8);
  v.lower *= v.upper.norm() / v.lower.norm();
  if (r == Realization::antidiagonal) return change_realization(v);
  return v;
}

Mat random_invertible(int n, Rng& rng, double cond) {
  if (cond < 1.0) throw std::invalid_argument("random_invertible: cond >= 1 required");
  const Mat g = rng.cnormal_mat(n, n);
  Eigen::JacobiSVD<Mat> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double half_log = 0.5 * std::log(cond);
  RVec s(n);
  for (int i = 0; i < n; ++i) s(i) = std::exp(rng.uniform(-half_log, half_log));
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

Mat random_unitary(int n, Rng& rng) {
  const Mat g = rng.cnormal_mat(n, n);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : cplx(1, 0);
  }
  return q;
}

}  // namespace ktw

// --- conventions table ----------------------------------------------------------

namespace ktw::conventions {

std::string table_text() {
  std::ostringstream os;
  os << "quad_identity_c = -i\n"
     << "phi_a = [[0,-iE],[iE,0]]; C = 2^-1/2 [[E,-iE],[-iE,E]]; C+ phi_d C = phi_a\n"
     << "pairing: L_Xpp.j_pm = I_pm; L_Xpm.j_pm = I_pp; L_Xpm.j_0 = I_0; "
        "L_Xpp.j_0 = 0\n"
     << "antidiagonal generator X_pm_tilde = C+ X_pm C = [[0,E],[-E,0]]; "
        "L.j_pm_tilde = +I_pp_tilde; L.j_0_tilde = +I_0_tilde\n"
     << "flows: f_dot = {H, f}; Y_dot = grad_X H; X_dot = -grad_Y H; "
        "X_dot(I_0_tilde) = -(XY+YX)\n"
     << "flat flow: eta_dot = +i dH/d(conj eta); xi_dot = -i dH/d(conj xi)\n"
     << "pauli: standard sigma_2 = [[0,-i],[i,0]]; a0 = tr(A)/2\n"
     << "ks: x_ks = zeta+ sigma zeta = 2 pauli(X).v; |x_ks| = zeta+ zeta; "
        "y_ks = pauli(Y).v\n"
     << "kepler: |x_ks|(1 + y^2) = I_0_tilde (multiple 1); R_0 = I_0_tilde/2\n"
     << "mr: M0 = 0; M = y x x_ks; R = ((1-y^2) x_ks + 2 (x_ks.y) y)/2; "
        "R0 = |x_ks|(1+y^2)/2; doubled-vector scale 2\n"
     << "correspondence: N- = eta eta+; N+ = xi xi+ (constant 1)\n"
     << "action-angle: u = (|eta|^2, -|xi|^2); {u_s, phi_t} = delta_st; "
        "I = rho u; psi = rho^-T phi\n"
     << "integrability: sum_j rho[r][j] k_j + rho[r][n+j] l_j = delta_r1\n"
     << "one-forms: gamma_0 = -tr(X dY); gamma_pm = -Im(v+ phi dv); "
        "pullback constant 1; gamma_0 on the section = 2 y.dx_pauli mod exact\n";
  return os.str();
}

std::uint64_t table_hash() {
  const std::string t = table_text();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : t) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ktw::conventions
