#include "ktw/regularize.hpp"

#include <stdexcept>

#include "ktw/linalg.hpp"

namespace ktw {

namespace {

constexpr double kInputTol = 1e-10;

void require_hermitian(const Mat& m, const char* who, const char* name) {
  if ((m - m.adjoint()).norm() > kInputTol * (1 + m.norm())) {
    throw std::invalid_argument(std::string(who) + ": " + name +
                                " is not hermitian");
  }
}

void require_null(const TwistorVector& v, const char* who) {
  if (v.realization != Realization::antidiagonal) {
    throw std::invalid_argument(std::string(who) +
                                ": expected antidiagonal realization");
  }
  if (std::abs(null_invariant(v)) > kInputTol * (1 + v.stacked().squaredNorm())) {
    throw std::invalid_argument(std::string(who) + ": twistor is not null");
  }
  if (v.lower.norm() <= kInputTol * (1 + v.upper.norm())) {
    throw std::invalid_argument(std::string(who) + ": zeta = 0");
  }
}

}  // namespace

Mat cayley(const Mat& y) {
  require_hermitian(y, "cayley", "Y");
  const Mat e = Mat::Identity(y.rows(), y.cols());
  const cplx i(0, 1);
  // -iY + E has eigenvalues 1 - i*lambda with real lambda, never zero.
  return (y - i * e) * (-i * y + e).partialPivLu().inverse();
}

Mat cayley_inverse(const Mat& z) {
  const Mat e = Mat::Identity(z.rows(), z.cols());
  const cplx i(0, 1);
  Eigen::FullPivLU<Mat> lu(i * z + e);
  if (!lu.isInvertible()) {
    throw std::domain_error(
        "cayley_inverse: det(iZ + E) = 0 (compactification boundary)");
  }
  return (z + i * e) * lu.inverse();
}

CotangentUn t_star_c(const CotangentHn& p) {
  require_hermitian(p.y, "t_star_c", "Y");
  require_hermitian(p.x, "t_star_c", "X");
  const Mat e = Mat::Identity(p.y.rows(), p.y.cols());
  const cplx i(0, 1);
  const Mat w = -i * p.y + e;
  CotangentUn out;
  out.z = cayley(p.y);
  out.rho = (i / 2.0) * w * p.x * w.adjoint();
  return out;
}

Vec rank_one_factor(const Mat& x, double tol) {
  require_hermitian(x, "rank_one_factor", "X");
  const double eff = tol > 0 ? tol : 1e-8 * (1 + x.norm());
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (x + x.adjoint()));
  const auto& ev = es.eigenvalues();  // ascending
  const int n = static_cast<int>(ev.size());
  if (ev(0) < -eff) {
    throw std::invalid_argument("rank_one_factor: X has a negative eigenvalue");
  }
  if (n > 1 && ev(n - 2) > eff) {
    throw std::invalid_argument("rank_one_factor: rank exceeds one");
  }
  if (ev(n - 1) <= eff) {
    throw std::invalid_argument("rank_one_factor: X vanishes (rank zero)");
  }
  Vec zeta = std::sqrt(ev(n - 1)) * es.eigenvectors().col(n - 1);
  // Phase rule: first entry with modulus above tol becomes positive real.
  for (int k = 0; k < n; ++k) {
    const double m = std::abs(zeta(k));
    if (m > eff) {
      zeta *= std::conj(zeta(k)) / m;
      break;
    }
  }
  return zeta;
}

CotangentHn ks_section(const TwistorVector& v) {
  require_null(v, "ks_section");
  const Vec& ups = v.upper;
  const Vec& zeta = v.lower;
  const double zz = zeta.squaredNorm();
  const Mat e = Mat::Identity(v.n, v.n);
  CotangentHn out;
  out.y = (zeta * ups.adjoint() + ups * zeta.adjoint() -
           std::real(zeta.dot(ups)) * e) /
          zz;
  out.x = zeta * zeta.adjoint();
  return out;
}

CotangentHn ks_section_alt(const TwistorVector& v) {
  require_null(v, "ks_section_alt");
  if (std::abs(v.upper.dot(v.lower)) <=
      kInputTol * (1 + v.stacked().squaredNorm())) {
    throw std::invalid_argument("ks_section_alt: ups^+ zeta = 0");
  }
  CotangentHn out;
  out.y = v.upper * v.upper.adjoint() / v.lower.squaredNorm();
  out.x = v.lower * v.lower.adjoint();
  return out;
}

TwistorVector submersion_r(const CotangentHn& p) {
  require_hermitian(p.y, "submersion_r", "Y");
  const Vec zeta = rank_one_factor(p.x);
  TwistorVector v;
  v.n = static_cast<int>(zeta.size());
  v.realization = Realization::antidiagonal;
  v.upper = p.y * zeta;
  v.lower = zeta;
  return canonical_phase(v);
}

TwistorVector k_reg(const CotangentHn& p) { return submersion_r(p); }

TwistorVector j_pm_factor(const AlgebraElement& a) {
  if (a.form.realization != Realization::diagonal) {
    throw std::invalid_argument("j_pm_factor: expected diagonal form");
  }
  const int n = a.form.n;
  const cplx i(0, 1);
  // j_pm(eta, xi) has blocks [[-i eta eta^+, i eta xi^+], [.., ..]]:
  // eta eta^+ = i * (top-left), then xi from the off-diagonal block.
  const Mat ee = i * a.m.topLeftCorner(n, n);
  const Vec eta = rank_one_factor(ee);
  const double nn = eta.squaredNorm();
  if (nn <= 0) {
    throw std::invalid_argument("j_pm_factor: eta = 0");
  }
  const Mat b = a.m.topRightCorner(n, n);  // i eta xi^+
  const Vec xi = i * b.adjoint() * eta / nn;
  TwistorVector v;
  v.n = n;
  v.realization = Realization::diagonal;
  v.upper = eta;
  v.lower = xi;
  // Residual guard: the input must actually lie on the rank-one image.
  if (rel_residual(j_pm(v).m, a.m) > 1e-8) {
    throw std::invalid_argument("j_pm_factor: input is not of the form j_pm(v)");
  }
  return canonical_phase(v);
}

TwistorVector c_reg(const CotangentHn& p) {
  return j_pm_factor(j0(t_star_c(p)));
}

double one_form_hn(const CotangentHn& p, const Mat& dy) {
  return -std::real((p.x * dy).trace());
}

double one_form_twistor(const TwistorVector& v, const Vec& w) {
  const Mat phi = make_form(v.n, v.realization).m;
  return -std::imag(v.stacked().dot(phi * w));
}

Mat pauli_matrix(int k) {
  Mat s(2, 2);
  switch (k) {
    case 0:
      s << 1, 0, 0, 1;
      break;
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli_matrix: index out of range");
  }
  return s;
}

PauliVector pauli_decompose(const Mat& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw std::invalid_argument("pauli_decompose: expected a 2x2 matrix");
  }
  require_hermitian(a, "pauli_decompose", "A");
  PauliVector p;
  p.s = 0.5 * std::real(a.trace());
  for (int k = 0; k < 3; ++k) {
    p.v[k] = 0.5 * std::real((a * pauli_matrix(k + 1)).trace());
  }
  return p;
}

Mat pauli_compose(const PauliVector& p) {
  Mat a = p.s * pauli_matrix(0);
  for (int k = 0; k < 3; ++k) a += p.v[k] * pauli_matrix(k + 1);
  return a;
}

KsVectors ks_transform_n2(const TwistorVector& v) {
  require_null(v, "ks_transform_n2");
  if (v.n != 2) {
    throw std::invalid_argument("ks_transform_n2: n must be 2");
  }
  const double zz = v.lower.squaredNorm();
  KsVectors out;
  for (int k = 0; k < 3; ++k) {
    const Mat s = pauli_matrix(k + 1);
    out.y[k] = std::real(v.lower.dot(s * v.upper)) / zz;
    out.x[k] = std::real(v.lower.dot(s * v.lower));
  }
  return out;
}

}  // namespace ktw
