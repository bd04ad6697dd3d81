#include "ktw/momentum.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "ktw/linalg.hpp"

namespace ktw {

namespace {

constexpr double kInputTol = 1e-10;

void require_realization(const TwistorVector& v, Realization r, const char* who) {
  if (v.realization != r) {
    throw std::invalid_argument(std::string(who) + ": expected " +
                                std::string(to_string(r)) + " realization");
  }
}

void require_unitary(const Mat& z, const char* who) {
  const Mat e = Mat::Identity(z.rows(), z.cols());
  if ((z.adjoint() * z - e).norm() > kInputTol * (1 + z.squaredNorm())) {
    throw std::invalid_argument(std::string(who) + ": Z is not unitary");
  }
}

void require_anti_hermitian(const Mat& rho, const char* who) {
  if ((rho + rho.adjoint()).norm() > kInputTol * (1 + rho.norm())) {
    throw std::invalid_argument(std::string(who) + ": rho is not anti-hermitian");
  }
}

void require_hermitian(const Mat& m, const char* who, const char* name) {
  if ((m - m.adjoint()).norm() > kInputTol * (1 + m.norm())) {
    throw std::invalid_argument(std::string(who) + ": " + name +
                                " is not hermitian");
  }
}

// Solves M W^{-1} for an n x n denominator W, throwing if W is singular.
Mat right_divide(const Mat& m, const Mat& w, const char* who) {
  Eigen::FullPivLU<Mat> lu(w);
  if (!lu.isInvertible()) {
    throw std::domain_error(std::string(who) +
                            ": denominator block is singular (point outside "
                            "the domain of the action)");
  }
  return m * lu.inverse();
}

}  // namespace

AlgebraElement j_pm(const TwistorVector& v) {
  require_realization(v, Realization::diagonal, "j_pm");
  const int n = v.n;
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = -v.upper * v.upper.adjoint();
  m.topRightCorner(n, n) = v.upper * v.lower.adjoint();
  m.bottomLeftCorner(n, n) = -v.lower * v.upper.adjoint();
  m.bottomRightCorner(n, n) = v.lower * v.lower.adjoint();
  return AlgebraElement{make_form(n, Realization::diagonal), cplx(0, 1) * m};
}

AlgebraElement j_pm_tilde(const TwistorVector& v) {
  require_realization(v, Realization::antidiagonal, "j_pm_tilde");
  const int n = v.n;
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = v.upper * v.lower.adjoint();
  m.topRightCorner(n, n) = -v.upper * v.upper.adjoint();
  m.bottomLeftCorner(n, n) = v.lower * v.lower.adjoint();
  m.bottomRightCorner(n, n) = -v.lower * v.upper.adjoint();
  return AlgebraElement{make_form(n, Realization::antidiagonal), m};
}

AlgebraElement j0(const CotangentUn& p) {
  require_unitary(p.z, "j0");
  require_anti_hermitian(p.rho, "j0");
  const int n = static_cast<int>(p.z.rows());
  const Mat zr = p.z * p.rho;
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = -zr * p.z.adjoint();
  m.topRightCorner(n, n) = zr;
  m.bottomLeftCorner(n, n) = zr.adjoint();
  m.bottomRightCorner(n, n) = p.rho;
  return AlgebraElement{make_form(n, Realization::diagonal), m};
}

AlgebraElement j0_tilde(const CotangentHn& p) {
  require_hermitian(p.y, "j0_tilde", "Y");
  require_hermitian(p.x, "j0_tilde", "X");
  const int n = static_cast<int>(p.y.rows());
  const Mat yx = p.y * p.x;
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = yx;
  m.topRightCorner(n, n) = -yx * p.y;
  m.bottomLeftCorner(n, n) = p.x;
  m.bottomRightCorner(n, n) = -p.x * p.y;
  return AlgebraElement{make_form(n, Realization::antidiagonal), m};
}

Mat act_on_un(const GroupElement& g, const Mat& z) {
  if (g.form.realization != Realization::diagonal) {
    throw std::invalid_argument("act_on_un: group element must use the "
                                "diagonal form");
  }
  const int n = g.form.n;
  const Mat num = g.m.topLeftCorner(n, n) * z + g.m.topRightCorner(n, n);
  const Mat den = g.m.bottomLeftCorner(n, n) * z + g.m.bottomRightCorner(n, n);
  return right_divide(num, den, "act_on_un");
}

CotangentUn act_lambda(const GroupElement& g, const CotangentUn& p) {
  if (g.form.realization != Realization::diagonal) {
    throw std::invalid_argument("act_lambda: group element must use the "
                                "diagonal form");
  }
  const int n = g.form.n;
  const Mat num = g.m.topLeftCorner(n, n) * p.z + g.m.topRightCorner(n, n);
  const Mat den = g.m.bottomLeftCorner(n, n) * p.z + g.m.bottomRightCorner(n, n);
  CotangentUn out;
  out.z = right_divide(num, den, "act_lambda");
  out.rho = den * p.rho * den.adjoint();
  return out;
}

CotangentHn act_sigma_tilde(const GroupElement& g, const CotangentHn& p) {
  if (g.form.realization != Realization::antidiagonal) {
    throw std::invalid_argument("act_sigma_tilde: group element must use the "
                                "anti-diagonal form");
  }
  const int n = g.form.n;
  const Mat num = g.m.topLeftCorner(n, n) * p.y + g.m.topRightCorner(n, n);
  const Mat den = g.m.bottomLeftCorner(n, n) * p.y + g.m.bottomRightCorner(n, n);
  CotangentHn out;
  out.y = right_divide(num, den, "act_sigma_tilde");
  out.x = den * p.x * den.adjoint();
  return out;
}

Mat ad(const Mat& g, const Mat& a) {
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("ad: group element is singular");
  }
  return g * a * lu.inverse();
}

AlgebraElement gen_pp(int n) {
  return AlgebraElement{make_form(n, Realization::diagonal),
                        cplx(0, 1) * Mat::Identity(2 * n, 2 * n)};
}

AlgebraElement gen_pm(int n) {
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = cplx(0, 1) * Mat::Identity(n, n);
  m.bottomRightCorner(n, n) = cplx(0, -1) * Mat::Identity(n, n);
  return AlgebraElement{make_form(n, Realization::diagonal), m};
}

AlgebraElement gen_pm_tilde(int n) {
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = Mat::Identity(n, n);
  m.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return AlgebraElement{make_form(n, Realization::antidiagonal), m};
}

LinearFunctional make_linear(const AlgebraElement& gen) {
  if (!is_algebra_element(gen.m, gen.form)) {
    throw std::invalid_argument("make_linear: generator fails algebra "
                                "membership");
  }
  return LinearFunctional{gen};
}

double linear_functional_eval(const LinearFunctional& l, const Mat& a) {
  if (a.rows() != l.gen.m.rows() || a.cols() != l.gen.m.cols()) {
    throw std::invalid_argument("linear_functional_eval: dimension mismatch");
  }
  return std::real((l.gen.m * a).trace());
}

double linear_functional_eval(const LinearFunctional& l,
                              const AlgebraElement& a) {
  if (a.form.realization != l.gen.form.realization) {
    throw std::invalid_argument("linear_functional_eval: form mismatch");
  }
  return linear_functional_eval(l, a.m);
}

LinearFunctional bracket_of_linear(const LinearFunctional& l1,
                                   const LinearFunctional& l2) {
  if (l1.gen.form.realization != l2.gen.form.realization ||
      l1.gen.form.n != l2.gen.form.n) {
    throw std::invalid_argument("bracket_of_linear: form mismatch");
  }
  const Mat comm = l1.gen.m * l2.gen.m - l2.gen.m * l1.gen.m;
  return LinearFunctional{AlgebraElement{l1.gen.form, comm}};
}

double lie_poisson_linear(const LinearFunctional& l1, const LinearFunctional& l2,
                          const AlgebraElement& a) {
  if (l1.gen.form.realization != l2.gen.form.realization ||
      l1.gen.form.realization != a.form.realization) {
    throw std::invalid_argument("lie_poisson_linear: form mismatch");
  }
  const int n = a.form.n;
  // Block partials of a linear functional are the constant blocks of its
  // generator; the bracket is assembled block-by-block from those partials.
  const auto blocks = [n](const Mat& m) {
    return std::array<Mat, 4>{m.topLeftCorner(n, n), m.topRightCorner(n, n),
                              m.bottomLeftCorner(n, n),
                              m.bottomRightCorner(n, n)};
  };
  const auto [a1, b1, c1, d1] = blocks(l1.gen.m);
  const auto [a2, b2, c2, d2] = blocks(l2.gen.m);
  const auto [al, be, ga, de] = blocks(a.m);
  cplx acc = (al * (a1 * a2 - a2 * a1 + b1 * c2 - b2 * c1)).trace() +
             (ga * (a1 * b2 - a2 * b1 + b1 * d2 - b2 * d1)).trace() +
             (be * (c1 * a2 - c2 * a1 + d1 * c2 - d2 * c1)).trace() +
             (de * (c1 * b2 - c2 * b1 + d1 * d2 - d2 * d1)).trace();
  return std::real(acc);
}

namespace {

// Wirtinger partials (d/dz_k, d/dzbar_k) of f at v for every stacked entry,
// by central differences in the real and imaginary parts.
std::pair<Vec, Vec> wirtinger(const FlatObservable& f, const TwistorVector& v,
                              double h) {
  const int dim = 2 * v.n;
  const Vec base = v.stacked();
  Vec dz(dim), dzbar(dim);
  for (int k = 0; k < dim; ++k) {
    Vec plus = base, minus = base;
    plus(k) += h;
    minus(k) -= h;
    const double dre =
        (f(TwistorVector::from_stacked(v.n, v.realization, plus)) -
         f(TwistorVector::from_stacked(v.n, v.realization, minus))) /
        (2 * h);
    plus = base;
    minus = base;
    plus(k) += cplx(0, h);
    minus(k) -= cplx(0, h);
    const double dim_part =
        (f(TwistorVector::from_stacked(v.n, v.realization, plus)) -
         f(TwistorVector::from_stacked(v.n, v.realization, minus))) /
        (2 * h);
    dz(k) = 0.5 * cplx(dre, -dim_part);
    dzbar(k) = 0.5 * cplx(dre, dim_part);
  }
  return {dz, dzbar};
}

double pick_step(double h, const TwistorVector& v) {
  return h > 0 ? h : 1e-6 * (1 + v.stacked().norm());
}

}  // namespace

double poisson_bracket_flat(const FlatObservable& f, const FlatObservable& g,
                            const TwistorVector& v, double h) {
  const double step = pick_step(h, v);
  const auto [fz, fzbar] = wirtinger(f, v, step);
  const auto [gz, gzbar] = wirtinger(g, v, step);
  const int n = v.n;
  cplx acc = 0;
  for (int k = 0; k < n; ++k) {
    acc += cplx(0, 1) * (fzbar(k) * gz(k) - fz(k) * gzbar(k));
  }
  for (int k = n; k < 2 * n; ++k) {
    acc -= cplx(0, 1) * (fzbar(k) * gz(k) - fz(k) * gzbar(k));
  }
  return std::real(acc);
}

Vec flat_hamiltonian_field(const FlatObservable& f, const TwistorVector& v,
                           double h) {
  const double step = pick_step(h, v);
  const auto [fz, fzbar] = wirtinger(f, v, step);
  const int n = v.n;
  Vec field(2 * n);
  for (int k = 0; k < n; ++k) field(k) = cplx(0, 1) * fzbar(k);
  for (int k = n; k < 2 * n; ++k) field(k) = cplx(0, -1) * fzbar(k);
  return field;
}

double obs_i_pp(const TwistorVector& v) {
  require_realization(v, Realization::diagonal, "obs_i_pp");
  return v.upper.squaredNorm() + v.lower.squaredNorm();
}

double obs_i_pp_tilde(const TwistorVector& v) {
  require_realization(v, Realization::antidiagonal, "obs_i_pp_tilde");
  return v.upper.squaredNorm() + v.lower.squaredNorm();
}

double obs_i0(const CotangentUn& p) { return 2.0 * std::imag(p.rho.trace()); }

double obs_i0_tilde(const CotangentHn& p) {
  const Mat e = Mat::Identity(p.y.rows(), p.y.cols());
  return std::real((p.x * (e + p.y * p.y)).trace());
}

}  // namespace ktw
