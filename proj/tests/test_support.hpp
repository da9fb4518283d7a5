#pragma once

// Deterministic random generators shared by the test binaries.

#include <algorithm>
#include <cmath>

#include "entrans/biphoton.hpp"
#include "entrans/mat2.hpp"
#include "entrans/media.hpp"
#include "entrans/rng.hpp"

namespace entrans::testutil {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double gauss(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

inline Mat2 random_unitary(Rng& rng) {
  const double alpha = uniform(rng, -kPi, kPi);
  const double theta = std::acos(1.0 - 2.0 * uniform01(rng));
  const double beta = uniform(rng, -kPi, kPi);
  const C64 phase = std::polar(1.0, uniform(rng, -kPi, kPi));
  return phase * su2_from_angles(alpha, theta, beta);
}

inline Mat2 random_matrix(Rng& rng) {
  Mat2 a;
  for (C64& e : a.e) {
    e = C64(gauss(rng), gauss(rng));
  }
  return a;
}

inline TwoPhotonState random_state(Rng& rng) {
  return make_state(random_matrix(rng));
}

// Passive medium with transmission eigenvalues in [tmin, tmax].
inline TransmissionMatrix random_media(Rng& rng, double tmin = 0.05,
                                       double tmax = 1.0) {
  double ta = uniform(rng, tmin, tmax);
  double tb = uniform(rng, tmin, tmax);
  if (tb > ta) {
    std::swap(ta, tb);
  }
  const Mat2 t = random_unitary(rng) * Mat2::diag(std::sqrt(ta), std::sqrt(tb)) *
                 random_unitary(rng);
  return make_transmission(t);
}

inline double max_entry_diff(const Mat2& a, const Mat2& b) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) {
    m = std::max(m, std::abs(a.e[k] - b.e[k]));
  }
  return m;
}

}  // namespace entrans::testutil
