// Deterministic random sampling. Only the raw mt19937_64 stream (bit-exact per
// the C++ standard) is consumed; all mappings to doubles are spelled out here
// so identical seeds give identical samples on every platform and build.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ktw/types.hpp"

namespace ktw {

// splitmix64 step; used to derive independent substream seeds from a base
// seed, so sample k of a sweep never depends on how samples 0..k-1 consumed
// the stream.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(base ^ mix_seed(stream + 0x517cc1b727220a95ull));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Standard normal via Box-Muller; second variate cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cplx cnormal() {
    const double re = normal(), im = normal();
    return cplx(re * M_SQRT1_2, im * M_SQRT1_2);
  }

  Vec cnormal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    return v;
  }

  Mat cnormal_mat(int rows, int cols) {
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cnormal();
    return m;
  }

  Mat hermitian(int n, double scale = 1.0) {
    Mat g = cnormal_mat(n, n);
    return scale * 0.5 * (g + g.adjoint()).eval();
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ktw
