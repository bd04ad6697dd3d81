// Core value types shared by every module.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Which matrix realization of the indefinite form a value belongs to.
// diagonal:      phi = [[E, 0], [0, -E]]          coordinates (eta, xi)
// antidiagonal:  phi = [[0, -iE], [iE, 0]]        coordinates (upsilon, zeta)
enum class Realization { diagonal, antidiagonal };

inline const char* to_string(Realization r) {
  return r == Realization::diagonal ? "diagonal" : "antidiagonal";
}

struct HermitianForm {
  int n = 0;
  Realization realization = Realization::diagonal;
  Mat m;  // 2n x 2n, hermitian, squares to the identity
};

// Point of C^{2n} carrying its realization tag. upper/lower are the two
// n-blocks: (eta, xi) in the diagonal realization, (upsilon, zeta) in the
// anti-diagonal one.
struct TwistorVector {
  int n = 0;
  Realization realization = Realization::diagonal;
  Vec upper, lower;

  Vec stacked() const {
    Vec v(2 * n);
    v.head(n) = upper;
    v.tail(n) = lower;
    return v;
  }
  static TwistorVector from_stacked(int n, Realization r, const Vec& v) {
    if (v.size() != 2 * n) throw std::invalid_argument("stacked size != 2n");
    TwistorVector t;
    t.n = n;
    t.realization = r;
    t.upper = v.head(n);
    t.lower = v.tail(n);
    return t;
  }
};

// Matrix tagged with the form it is (anti-)unitary or anti-selfadjoint for.
struct AlgebraElement {
  HermitianForm form;
  Mat m;
};
struct GroupElement {
  HermitianForm form;
  Mat m;
};

// Signature label (k, l) of a coadjoint orbit: counts of positive/negative
// eigenvalues of -i*rho.
struct OrbitLabel {
  int k = 0, l = 0;
  bool operator==(const OrbitLabel& o) const { return k == o.k && l == o.l; }
};

// Point of T*U(n): z unitary, rho anti-hermitian (the fiber, left-trivialized).
struct CotangentUn {
  Mat z, rho;
};

// Point of T*H(n): y, x hermitian n x n.
struct CotangentHn {
  Mat y, x;
};

// Real scalar+vector components of a 2x2 hermitian matrix in the basis
// (E, sigma_1, sigma_2, sigma_3), with the scalar normalized as s = tr(A)/2.
struct PauliVector {
  double s = 0.0;
  std::array<double, 3> v{0.0, 0.0, 0.0};
};

// Linear observable A -> Re tr(gen * A) on the algebra (gen fixed).
struct LinearFunctional {
  AlgebraElement gen;
};

// Signed exponent vector (k_1..k_n, l_1..l_n) of a trigonometric monomial.
struct ExponentVector {
  std::vector<int> k, l;
};

// Invertible real 2n x 2n matrix rho mapping moduli coordinates
// u = (|eta_1|^2..|eta_n|^2, -|xi_1|^2..-|xi_n|^2) to actions I = rho * u,
// with kappa = rho^{-1} cached.
struct ActionAngleChart {
  int n = 0;
  RMat rho, kappa;
};

inline double sq(double x) { return x * x; }

}  // namespace ktw
