#include "ktw/dynamics.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktw/conventions.hpp"
#include "ktw/momentum.hpp"
#include "ktw/twistor_core.hpp"

namespace ktw {
namespace {

constexpr double kInputTol = 1e-10;

void require_hermitian(const char* name, const Mat& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument(std::string(name) + " must be square");
  if ((m - m.adjoint()).norm() > kInputTol * (1.0 + m.norm()))
    throw std::invalid_argument(std::string(name) + " must be hermitian");
}

void require_point(const CotangentHn& p) {
  require_hermitian("y", p.y);
  require_hermitian("x", p.x);
  if (p.y.rows() != p.x.rows())
    throw std::invalid_argument("y and x sizes differ");
}

// Orthonormal basis of H(n) for <A, B> = Re tr(A B): the diagonal units, then
// (E_ij + E_ji)/sqrt(2) and (i E_ij - i E_ji)/sqrt(2) for i < j.
std::vector<Mat> hermitian_basis(int n) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Mat b = Mat::Zero(n, n);
    b(i, i) = 1.0;
    basis.push_back(b);
  }
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat re = Mat::Zero(n, n);
      re(i, j) = s;
      re(j, i) = s;
      basis.push_back(re);
      Mat im = Mat::Zero(n, n);
      im(i, j) = cplx(0.0, s);
      im(j, i) = cplx(0.0, -s);
      basis.push_back(im);
    }
  }
  return basis;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross3(const std::array<double, 3>& a,
                             const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

CotangentHn hamiltonian_field(const CotangentHn& p) {
  require_point(p);
  const int n = static_cast<int>(p.y.rows());
  CotangentHn dot;
  dot.y = Mat::Identity(n, n) + p.y * p.y;
  dot.x = -(p.x * p.y + p.y * p.x);
  return dot;
}

CotangentHn fd_hamiltonian_field(const HnObservable& h, const CotangentHn& p,
                                 double step) {
  if (!h) throw std::invalid_argument("observable is empty");
  require_point(p);
  const int n = static_cast<int>(p.y.rows());
  const double s =
      step > 0.0 ? step : 1e-6 * (1.0 + p.y.norm() + p.x.norm());
  Mat grad_y = Mat::Zero(n, n);
  Mat grad_x = Mat::Zero(n, n);
  CotangentHn q = p;
  for (const Mat& b : hermitian_basis(n)) {
    q.y = p.y + s * b;
    const double yp = h(q);
    q.y = p.y - s * b;
    const double ym = h(q);
    q.y = p.y;
    q.x = p.x + s * b;
    const double xp = h(q);
    q.x = p.x - s * b;
    const double xm = h(q);
    q.x = p.x;
    grad_y += ((yp - ym) / (2.0 * s)) * b;
    grad_x += ((xp - xm) / (2.0 * s)) * b;
  }
  CotangentHn dot;
  dot.y = grad_x;
  dot.x = -grad_y;
  return dot;
}

GroupElement group_flow_element(int n, double t) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Mat e = Mat::Identity(n, n);
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = c * e;
  m.topRightCorner(n, n) = s * e;
  m.bottomLeftCorner(n, n) = -s * e;
  m.bottomRightCorner(n, n) = c * e;
  GroupElement g;
  g.form = make_form(n, Realization::antidiagonal);
  g.m = m;
  return g;
}

CotangentHn flow_closed_form(const CotangentHn& p, double t) {
  require_point(p);
  const int n = static_cast<int>(p.y.rows());
  return act_sigma_tilde(group_flow_element(n, t), p);
}

TwistorVector flow_linear(const TwistorVector& v, double t) {
  if (v.realization != Realization::diagonal)
    throw std::invalid_argument("flow_linear expects the diagonal realization");
  const cplx phase = std::polar(1.0, t);
  TwistorVector out = v;
  out.upper = phase * v.upper;
  out.lower = std::conj(phase) * v.lower;
  return out;
}

Trajectory integrate_rk4(
    const RealField& field, const RVec& state0, double t_end, double dt,
    const std::function<std::vector<double>(const RVec&)>& log,
    const std::vector<std::string>& log_names) {
  if (!field) throw std::invalid_argument("field is empty");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");

  Trajectory traj;
  traj.invariant_names = log_names;
  RVec s = state0;
  auto record = [&](double time) {
    traj.times.push_back(time);
    traj.states.push_back(s);
    if (log) traj.invariants.push_back(log(s));
  };
  record(0.0);

  long step = 0;
  double done = 0.0;
  while (done < t_end) {
    const double h = std::min(dt, t_end - done);
    const RVec k1 = field(s);
    const RVec k2 = field(s + (0.5 * h) * k1);
    const RVec k3 = field(s + (0.5 * h) * k2);
    const RVec k4 = field(s + h * k3);
    s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    ++step;
    done = std::min(t_end, static_cast<double>(step) * dt);
    if (!s.allFinite()) {
      std::ostringstream msg;
      msg << "integration aborted: non-finite state after step " << step
          << " (t = " << done << ")";
      throw std::runtime_error(msg.str());
    }
    record(done);
  }
  return traj;
}

RVec pack_hn(const CotangentHn& p) {
  const int n = static_cast<int>(p.y.rows());
  if (p.y.cols() != n || p.x.rows() != n || p.x.cols() != n)
    throw std::invalid_argument("y and x must be square of equal size");
  RVec s(4 * n * n);
  int idx = 0;
  for (const Mat* m : {&p.y, &p.x}) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        s(idx++) = (*m)(i, j).real();
        s(idx++) = (*m)(i, j).imag();
      }
    }
  }
  return s;
}

CotangentHn unpack_hn(const RVec& s, int n) {
  if (n <= 0 || s.size() != 4 * n * n)
    throw std::invalid_argument("packed state size != 4 n^2");
  CotangentHn p;
  p.y = Mat(n, n);
  p.x = Mat(n, n);
  int idx = 0;
  for (Mat* m : {&p.y, &p.x}) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double re = s(idx++);
        const double im = s(idx++);
        (*m)(i, j) = cplx(re, im);
      }
    }
  }
  return p;
}

RVec pack_twistor(const TwistorVector& v) {
  if (v.n <= 0 || v.upper.size() != v.n || v.lower.size() != v.n)
    throw std::invalid_argument("twistor blocks must have length n");
  RVec s(4 * v.n);
  int idx = 0;
  for (const Vec* blk : {&v.upper, &v.lower}) {
    for (int i = 0; i < v.n; ++i) {
      s(idx++) = (*blk)(i).real();
      s(idx++) = (*blk)(i).imag();
    }
  }
  return s;
}

TwistorVector unpack_twistor(const RVec& s, int n, Realization r) {
  if (n <= 0 || s.size() != 4 * n)
    throw std::invalid_argument("packed twistor size != 4 n");
  TwistorVector v;
  v.n = n;
  v.realization = r;
  v.upper = Vec(n);
  v.lower = Vec(n);
  int idx = 0;
  for (Vec* blk : {&v.upper, &v.lower}) {
    for (int i = 0; i < n; ++i) {
      const double re = s(idx++);
      const double im = s(idx++);
      (*blk)(i) = cplx(re, im);
    }
  }
  return v;
}

void integrals_mr(const CotangentHn& p, Mat& m_out, Mat& r_out) {
  require_point(p);
  const cplx i(0.0, 1.0);
  m_out = i * (p.x * p.y - p.y * p.x);
  r_out = p.x + p.y * p.x * p.y;
}

void n_plus_minus(const CotangentHn& p, Mat& n_plus, Mat& n_minus) {
  Mat m, r;
  integrals_mr(p, m, r);
  n_plus = 0.5 * (r + m);
  n_minus = 0.5 * (r - m);
}

double kepler_h0_n2(const std::array<double, 3>& y,
                    const std::array<double, 3>& x) {
  const double nx = std::sqrt(dot3(x, x));
  if (!(nx > 0.0)) throw std::domain_error("kepler_h0_n2: x vanishes");
  return nx * (1.0 + dot3(y, y));
}

std::vector<double> fictitious_to_physical(const Trajectory& traj) {
  if (traj.states.size() != traj.times.size())
    throw std::invalid_argument("trajectory times/states size mismatch");
  if (traj.states.empty()) return {};

  std::vector<double> speed;
  speed.reserve(traj.states.size());
  for (const RVec& s : traj.states) {
    if (s.size() != 16)
      throw std::invalid_argument(
          "fictitious_to_physical expects packed n = 2 states");
    const CotangentHn p = unpack_hn(s, 2);
    const PauliVector px = pauli_decompose(p.x);
    const double nx = conventions::ks_vector_scale * std::sqrt(dot3(px.v, px.v));
    if (!(nx > 0.0)) throw std::domain_error("nonpositive |x| sample");
    speed.push_back(nx);
  }

  std::vector<double> t(speed.size(), 0.0);
  for (std::size_t k = 1; k < speed.size(); ++k) {
    const double ds = traj.times[k] - traj.times[k - 1];
    if (!(ds > 0.0))
      throw std::invalid_argument("times must be strictly increasing");
    t[k] = t[k - 1] + 0.5 * (speed[k - 1] + speed[k]) * ds;
  }
  return t;
}

MrVectors mr_vectors_n2(const std::array<double, 3>& y,
                        const std::array<double, 3>& x) {
  const double y2 = dot3(y, y);
  const double xy = dot3(x, y);
  const double nx = std::sqrt(dot3(x, x));
  MrVectors out;
  out.m0 = 0.0;
  out.r0 = 0.5 * nx * (1.0 + y2);
  out.m = cross3(y, x);
  for (int k = 0; k < 3; ++k)
    out.r[k] = 0.5 * ((1.0 - y2) * x[k] + 2.0 * xy * y[k]);
  return out;
}

}  // namespace ktw
