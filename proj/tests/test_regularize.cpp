#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>

#include "ktw/linalg.hpp"
#include "ktw/momentum.hpp"
#include "ktw/regularize.hpp"
#include "ktw/twistor_core.hpp"

using namespace ktw;
using std::abs;

namespace {
TwistorVector make_tv(int n, Realization r, const Vec& up, const Vec& lo) {
  TwistorVector v;
  v.n = n;
  v.realization = r;
  v.upper = up;
  v.lower = lo;
  return v;
}

// Random point of the rank-one stratum: X = zeta zeta^+, Y hermitian.
CotangentHn random_rank_one_point(int n, Rng& rng) {
  CotangentHn p;
  p.y = rng.hermitian(n);
  Vec zeta = rng.cnormal_vec(n);
  while (zeta.norm() < 1e-2) zeta = rng.cnormal_vec(n);
  p.x = zeta * zeta.adjoint();
  return p;
}
}  // namespace

TEST_CASE("cayley transform pinned values and round trip") {
  const Mat z0 = cayley(Mat::Zero(2, 2));
  CHECK((z0 - cplx(0, -1) * Mat::Identity(2, 2)).norm() <= 1e-15);

  const Mat z1 = cayley(Mat::Identity(1, 1));
  CHECK(abs(z1(0, 0) - cplx(1, 0)) <= 1e-15);

  Rng rng(211);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.bits() % 6);
    const Mat y = 2.0 * rng.hermitian(n);
    const Mat z = cayley(y);
    CHECK((z.adjoint() * z - Mat::Identity(n, n)).norm() <=
          1e-12 * (1 + z.squaredNorm()));
    CHECK((cayley_inverse(z) - y).norm() <= 1e-10 * (1 + y.norm()));
  }
  CHECK_THROWS_AS(cayley((Mat(2, 2) << 0, 1, 0, 0).finished()),
                  std::invalid_argument);
}

TEST_CASE("cayley_inverse pinned values and boundary") {
  CHECK(cayley_inverse(cplx(0, -1) * Mat::Identity(3, 3)).norm() <= 1e-15);
  const Mat y1 = cayley_inverse(Mat::Identity(1, 1));
  CHECK(abs(y1(0, 0) - cplx(1, 0)) <= 1e-15);
  CHECK_THROWS_AS(cayley_inverse(cplx(0, 1) * Mat::Identity(2, 2)),
                  std::domain_error);
}

TEST_CASE("t_star_c pinned values, invariants, intertwining square") {
  CotangentHn zero;
  zero.y = Mat::Zero(2, 2);
  zero.x = Mat::Zero(2, 2);
  const CotangentUn img = t_star_c(zero);
  CHECK((img.z - cplx(0, -1) * Mat::Identity(2, 2)).norm() <= 1e-15);
  CHECK(img.rho.norm() == 0.0);

  Rng rng(223);
  const Mat x = rng.hermitian(2);
  CotangentHn flat;
  flat.y = Mat::Zero(2, 2);
  flat.x = x;
  const CotangentUn img2 = t_star_c(flat);
  CHECK((img2.rho - (cplx(0, 1) / 2.0) * x).norm() <= 1e-14 * (1 + x.norm()));

  for (int n : {1, 2, 3}) {
    const Mat c = cayley_intertwiner(n).m;
    for (int trial = 0; trial < 30; ++trial) {
      CotangentHn p;
      p.y = rng.hermitian(n);
      p.x = rng.hermitian(n);
      const CotangentUn q = t_star_c(p);
      CHECK((q.z.adjoint() * q.z - Mat::Identity(n, n)).norm() <= 1e-11);
      CHECK((q.rho + q.rho.adjoint()).norm() <= 1e-12 * (1 + q.rho.norm()));
      // Bottom square of the realization diagram.
      CHECK(rel_residual(ad(c, j0_tilde(p).m), j0(q).m) <= 1e-9);
    }
  }
}

TEST_CASE("rank_one_factor") {
  Vec e1 = Vec::Zero(3);
  e1(0) = 1.0;
  const Vec f = rank_one_factor(e1 * e1.adjoint());
  CHECK((f - e1).norm() <= 1e-14);

  Rng rng(227);
  Vec u = rng.cnormal_vec(4);
  u.normalize();
  const Vec g = rank_one_factor(2.0 * u * u.adjoint());
  CHECK(phase_class_distance(g, Vec(std::sqrt(2.0) * u)) <= 1e-12);
  CHECK((g * g.adjoint() - 2.0 * u * u.adjoint()).norm() <= 1e-12);
  // Phase rule: first entry with modulus above tol is positive real.
  CHECK(std::real(g(0)) > 0.0);
  CHECK(abs(std::imag(g(0))) <= 1e-13 * abs(g(0)));

  CHECK_THROWS_AS(rank_one_factor(Mat::Identity(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(rank_one_factor(Mat(-e1 * e1.adjoint())),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank_one_factor(Mat::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("ks_section pinned values and section laws") {
  const TwistorVector ones = make_tv(1, Realization::antidiagonal,
                                     Vec::Constant(1, cplx(1, 0)),
                                     Vec::Constant(1, cplx(1, 0)));
  const CotangentHn p = ks_section(ones);
  CHECK(abs(p.y(0, 0) - cplx(1, 0)) <= 1e-15);
  CHECK(abs(p.x(0, 0) - cplx(1, 0)) <= 1e-15);

  Rng rng(229);
  for (int n : {1, 2, 3}) {
    Vec zeta = rng.cnormal_vec(n);
    const TwistorVector vz =
        make_tv(n, Realization::antidiagonal, Vec::Zero(n), zeta);
    const CotangentHn pz = ks_section(vz);
    CHECK(pz.y.norm() <= 1e-15);
    CHECK((pz.x - zeta * zeta.adjoint()).norm() <= 1e-15);

    for (int trial = 0; trial < 200; ++trial) {
      const TwistorVector v =
          random_null_twistor(n, Realization::antidiagonal, rng);
      const CotangentHn q = ks_section(v);
      CHECK((q.y - q.y.adjoint()).norm() <= 1e-12 * (1 + q.y.norm()));
      CHECK((q.y * v.lower - v.upper).norm() <= 1e-12 * (1 + v.upper.norm()));
      // U(1)-phase invariance.
      const cplx lam = std::polar(1.0, rng.uniform(0, 2 * M_PI));
      TwistorVector w = v;
      w.upper *= lam;
      w.lower *= lam;
      const CotangentHn qw = ks_section(w);
      CHECK((qw.y - q.y).norm() <= 1e-13 * (1 + q.y.norm()));
      CHECK((qw.x - q.x).norm() <= 1e-13 * (1 + q.x.norm()));
    }
  }

  CHECK_THROWS_AS(ks_section(make_tv(1, Realization::antidiagonal,
                                     Vec::Constant(1, cplx(1, 0)), Vec::Zero(1))),
                  std::invalid_argument);
  // Non-null input.
  CHECK_THROWS_AS(ks_section(make_tv(1, Realization::antidiagonal,
                                     Vec::Constant(1, cplx(0, 1)),
                                     Vec::Constant(1, cplx(1, 0)))),
                  std::invalid_argument);
  // Wrong realization.
  CHECK_THROWS_AS(ks_section(make_tv(1, Realization::diagonal,
                                     Vec::Constant(1, cplx(1, 0)),
                                     Vec::Constant(1, cplx(1, 0)))),
                  std::invalid_argument);
}

TEST_CASE("alternative section: domain of validity") {
  Rng rng(233);
  const int n = 3;
  int generic_failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // On the slice ups = zeta + w with w orthogonal to zeta, the alternative
    // section reproduces upsilon exactly...
    Vec zeta = rng.cnormal_vec(n);
    Vec w = rng.cnormal_vec(n);
    w -= zeta * (zeta.dot(w) / zeta.squaredNorm());
    const Vec ups = zeta + w;
    const TwistorVector v = make_tv(n, Realization::antidiagonal, ups, zeta);
    CHECK(abs(null_invariant(v)) <= 1e-12 * (1 + v.stacked().squaredNorm()));
    const CotangentHn p = ks_section_alt(v);
    CHECK((p.y * zeta - ups).norm() <= 1e-10 * (1 + ups.norm()));

    // ... and in general it returns Y zeta = ups (ups^+ zeta)/(zeta^+ zeta),
    // which differs from ups whenever ups^+ zeta != zeta^+ zeta.
    const double a = 0.35;  // real scaling keeps the twistor null
    const TwistorVector vs =
        make_tv(n, Realization::antidiagonal, Vec(a * ups), zeta);
    const CotangentHn ps = ks_section_alt(vs);
    const cplx ratio = (a * ups).dot(zeta) / cplx(zeta.squaredNorm(), 0);
    CHECK((ps.y * zeta - ratio * (a * ups)).norm() <=
          1e-10 * (1 + ups.norm()));
    if ((ps.y * zeta - a * ups).norm() > 1e-3 * (1 + ups.norm())) {
      ++generic_failures;
    }
  }
  // The section law fails off the special slice: this is a genuinely smaller
  // domain than ks_section's.
  CHECK(generic_failures >= 45);
}

TEST_CASE("submersion_r and k_reg: round trips and energy match") {
  const TwistorVector ones = make_tv(1, Realization::antidiagonal,
                                     Vec::Constant(1, cplx(1, 0)),
                                     Vec::Constant(1, cplx(1, 0)));
  const TwistorVector back = submersion_r(ks_section(ones));
  CHECK(phase_class_distance(back, ones) <= 1e-12);

  Rng rng(239);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 200; ++trial) {
      const TwistorVector v =
          random_null_twistor(n, Realization::antidiagonal, rng);
      CHECK(phase_class_distance(submersion_r(ks_section(v)), v) <= 1e-12);

      const CotangentHn p = random_rank_one_point(n, rng);
      const TwistorVector rv = k_reg(p);
      CHECK(abs(null_invariant(rv)) <=
            1e-10 * (1 + rv.stacked().squaredNorm()));
      CHECK(obs_i_pp_tilde(rv) ==
            doctest::Approx(obs_i0_tilde(p)).epsilon(1e-10));
    }
  }

  CotangentHn bad;
  bad.y = Mat::Zero(2, 2);
  bad.x = Mat::Identity(2, 2);
  CHECK_THROWS_AS(submersion_r(bad), std::invalid_argument);
}

TEST_CASE("k_reg equals c_reg as twistor classes") {
  Rng rng(241);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 150; ++trial) {
      const CotangentHn p = random_rank_one_point(n, rng);
      const TwistorVector via_ks = change_realization(k_reg(p));
      const TwistorVector via_cayley = c_reg(p);
      CHECK(via_cayley.realization == Realization::diagonal);
      CHECK(phase_class_distance(via_ks, via_cayley) <= 1e-9);
    }
  }
  // U(1)-rotated rank-one factor gives byte-identical canonical classes.
  const CotangentHn p = random_rank_one_point(2, rng);
  const TwistorVector a = k_reg(p);
  CotangentHn q = p;  // same point: X unchanged by the phase of zeta
  const TwistorVector b = k_reg(q);
  CHECK((a.stacked() - b.stacked()).norm() == 0.0);
}

TEST_CASE("pauli layer") {
  const PauliVector p0 = pauli_decompose(pauli_matrix(0));
  CHECK(p0.s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(abs(p0.v[0]) + abs(p0.v[1]) + abs(p0.v[2]) <= 1e-15);

  const PauliVector p3 = pauli_decompose(pauli_matrix(3));
  CHECK(p3.s == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p3.v[2] == doctest::Approx(1.0).epsilon(1e-15));

  // sigma_2 pinned to the standard convention.
  const Mat s2 = pauli_matrix(2);
  CHECK(abs(s2(0, 1) - cplx(0, -1)) <= 1e-16);
  CHECK(abs(s2(1, 0) - cplx(0, 1)) <= 1e-16);

  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      const Mat anti = pauli_matrix(k) * pauli_matrix(l) +
                       pauli_matrix(l) * pauli_matrix(k);
      const Mat want = (k == l ? 2.0 : 0.0) * Mat::Identity(2, 2);
      CHECK((anti - want).norm() <= 1e-15);
    }
  }

  Rng rng(251);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = rng.hermitian(2);
    CHECK((pauli_compose(pauli_decompose(a)) - a).norm() <=
          1e-14 * (1 + a.norm()));
  }
  CHECK_THROWS_AS(pauli_decompose(Mat::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("ks_transform_n2 pinned values and conventions") {
  Vec z1 = Vec::Zero(2);
  z1(0) = 1.0;
  const KsVectors k1 = ks_transform_n2(
      make_tv(2, Realization::antidiagonal, Vec::Zero(2), z1));
  CHECK(abs(k1.y[0]) + abs(k1.y[1]) + abs(k1.y[2]) <= 1e-15);
  CHECK(k1.x[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(k1.x[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(k1.x[2] == doctest::Approx(1.0).epsilon(1e-15));

  Vec z2 = Vec::Zero(2);
  z2(1) = 1.0;
  const KsVectors k2 = ks_transform_n2(
      make_tv(2, Realization::antidiagonal, Vec::Zero(2), z2));
  CHECK(k2.x[2] == doctest::Approx(-1.0).epsilon(1e-15));

  Rng rng(257);
  for (int trial = 0; trial < 100; ++trial) {
    const TwistorVector v =
        random_null_twistor(2, Realization::antidiagonal, rng);
    const KsVectors k = ks_transform_n2(v);
    const CotangentHn p = ks_section(v);
    const PauliVector py = pauli_decompose(p.y);
    const PauliVector px = pauli_decompose(p.x);
    // Section image has trace-free Y, so its Pauli scalar vanishes.
    CHECK(abs(py.s) <= 1e-13 * (1 + p.y.norm()));
    const double zz = v.lower.squaredNorm();
    double xnorm2 = 0;
    for (int c = 0; c < 3; ++c) {
      CHECK(k.y[c] == doctest::Approx(py.v[c]).epsilon(1e-11));
      CHECK(k.x[c] == doctest::Approx(2.0 * px.v[c]).epsilon(1e-11));
      xnorm2 += k.x[c] * k.x[c];
    }
    CHECK(std::sqrt(xnorm2) == doctest::Approx(zz).epsilon(1e-11));

    const cplx lam = std::polar(1.0, rng.uniform(0, 2 * M_PI));
    TwistorVector w = v;
    w.upper *= lam;
    w.lower *= lam;
    const KsVectors kw = ks_transform_n2(w);
    for (int c = 0; c < 3; ++c) {
      CHECK(kw.y[c] == doctest::Approx(k.y[c]).epsilon(1e-12));
      CHECK(kw.x[c] == doctest::Approx(k.x[c]).epsilon(1e-12));
    }
  }
}

namespace {
// Smooth curve in the rank-one stratum with a dominant first zeta entry
// (keeps the canonical-phase anchor fixed along the curve).
struct RankOneCurve {
  Mat y0, y1;
  Vec z0, z1;
  CotangentHn at(double t) const {
    CotangentHn p;
    p.y = y0 + std::sin(t) * y1;
    const Vec zeta = z0 + std::cos(t) * z1;
    p.x = zeta * zeta.adjoint();
    return p;
  }
};

RankOneCurve random_curve(int n, Rng& rng) {
  RankOneCurve c;
  c.y0 = rng.hermitian(n);
  c.y1 = rng.hermitian(n);
  c.z0 = rng.cnormal_vec(n);
  c.z0(0) += cplx(4.0, 0.0);
  c.z1 = 0.3 * rng.cnormal_vec(n);
  return c;
}
}  // namespace

TEST_CASE("one-form pullback along the submersion") {
  Rng rng(263);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const RankOneCurve curve = random_curve(n, rng);
      for (double t : {0.2, 0.9, 1.7, 2.6}) {
        const double h = 1e-5;
        const CotangentHn pm = curve.at(t - h), pp = curve.at(t + h);
        const Mat ydot = (pp.y - pm.y) / (2 * h);
        const double lhs = one_form_hn(curve.at(t), ydot);

        const TwistorVector vm = submersion_r(pm), vp = submersion_r(pp);
        const Vec vdot = (vp.stacked() - vm.stacked()) / (2 * h);
        const double rhs = one_form_twistor(submersion_r(curve.at(t)), vdot);
        CHECK(abs(lhs - rhs) <= 1e-6 * (1 + abs(lhs)));
      }
    }
  }

  // The twistor one-form annihilates the gauge direction on the null set,
  // and equals minus the null invariant off it.
  for (int trial = 0; trial < 20; ++trial) {
    const TwistorVector v =
        random_null_twistor(3, Realization::antidiagonal, rng);
    CHECK(abs(one_form_twistor(v, Vec(cplx(0, 1) * v.stacked()))) <=
          1e-12 * (1 + v.stacked().squaredNorm()));
    const TwistorVector w = random_twistor(3, Realization::antidiagonal, rng);
    CHECK(one_form_twistor(w, Vec(cplx(0, 1) * w.stacked())) ==
          doctest::Approx(-null_invariant(w)).epsilon(1e-12));
  }
}

TEST_CASE("restricted one-form is twice the Pauli area term") {
  // Around closed loops in the image of ks_section (n = 2), the integral of
  // gamma_0 equals the integral of 2 y.dx in half-trace Pauli components;
  // the factor is exactly 2, not 1.
  Rng rng(269);
  for (int trial = 0; trial < 5; ++trial) {
    Vec zc = rng.cnormal_vec(2), zs = 0.25 * rng.cnormal_vec(2);
    zc(0) += cplx(3.0, 0.0);
    Vec uc = rng.cnormal_vec(2), us = 0.25 * rng.cnormal_vec(2);

    const auto vat = [&](double t) {
      const Vec zeta = zc + std::cos(t) * zs;
      Vec raw = std::sin(t) * uc + std::cos(2 * t) * us;
      // Project to the null slice: subtract the zeta-component's imaginary part.
      const cplx overlap = zeta.dot(raw) / cplx(zeta.squaredNorm(), 0);
      const Vec ups = raw - cplx(0, overlap.imag()) * zeta;
      return make_tv(2, Realization::antidiagonal, ups, zeta);
    };

    const int steps = 4000;
    double loop_gamma = 0.0, loop_area = 0.0;
    for (int k = 0; k < steps; ++k) {
      const double t = 2 * M_PI * k / steps;
      const double h = 2 * M_PI / steps;
      const CotangentHn pp = ks_section(vat(t + h / 2));
      const CotangentHn pm = ks_section(vat(t - h / 2));
      const CotangentHn pc = ks_section(vat(t));
      const Mat ydot = (pp.y - pm.y) / h;
      loop_gamma += one_form_hn(pc, ydot) * h;

      const PauliVector xq = pauli_decompose(pp.x);
      const PauliVector xm = pauli_decompose(pm.x);
      const PauliVector yc = pauli_decompose(pc.y);
      for (int c = 0; c < 3; ++c) {
        loop_area += 2.0 * yc.v[c] * (xq.v[c] - xm.v[c]) / h * h;
      }
    }
    CHECK(loop_gamma == doctest::Approx(loop_area).epsilon(1e-5));
    // Discriminating: the factor really is 2 (the loop integrals are nonzero).
    CHECK(abs(loop_gamma) > 1e-3);
    CHECK(abs(loop_gamma - 0.5 * loop_area) > 1e-3);
  }
}
