#include "doctest.h"

#include <cmath>
#include <complex>

#include "entrans/biphoton.hpp"
#include "entrans/errors.hpp"
#include "test_support.hpp"

using namespace entrans;
using entrans::testutil::kPi;
using entrans::testutil::max_entry_diff;
using entrans::testutil::random_state;
using entrans::testutil::random_unitary;

namespace {

Mat2 bell_matrix() {
  Mat2 a = Mat2::zero();
  a(0, 1) = C64(1.0, 0.0);
  a(1, 0) = C64(-1.0, 0.0);
  return a;
}

// e^{-i alpha} w with alpha = arg(det w) / 2 lands w in SU(2) form.
Mat2 su2_of(const Mat2& w, double* alpha) {
  *alpha = std::arg(det(w)) / 2.0;
  return std::polar(1.0, -*alpha) * w;
}

}  // namespace

TEST_CASE("make_state normalizes and rejects zero") {
  const TwoPhotonState bell = make_state(bell_matrix());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(bell.a(0, 1) - C64(inv_sqrt2, 0.0)) < 1e-15);
  CHECK(std::abs(bell.a(1, 0) + C64(inv_sqrt2, 0.0)) < 1e-15);
  CHECK(std::abs(bell.a(0, 0)) == 0.0);

  const TwoPhotonState rescaled = make_state(Mat2::diag(2.0, 0.0));
  CHECK(max_entry_diff(rescaled.a, Mat2::diag(1.0, 0.0)) == 0.0);

  CHECK_THROWS_AS(make_state(Mat2::zero()), ZeroState);
}

TEST_CASE("concurrence matches the closed form") {
  CHECK(concurrence(make_state(bell_matrix())) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence(make_state(Mat2::diag(1.0, 0.0))) == 0.0);
  const TwoPhotonState s =
      make_state(Mat2::diag(std::sqrt(0.9), std::sqrt(0.1)));
  CHECK(concurrence(s) == doctest::Approx(0.6).epsilon(1e-13));
}

TEST_CASE("s_from_p endpoints and domain") {
  CHECK(s_from_p(1.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s_from_p(0.0) == 2.0);
  CHECK(s_from_p(0.6) == doctest::Approx(2.0 * std::sqrt(1.36)).epsilon(1e-15));
  CHECK_THROWS_AS(s_from_p(-0.1), DomainError);
  CHECK_THROWS_AS(s_from_p(1.1), DomainError);
}

TEST_CASE("apply_local preserves entanglement") {
  Rng rng(21);
  const TwoPhotonState bell = make_state(bell_matrix());
  const TwoPhotonState same = apply_local(bell, Mat2::identity(), Mat2::identity());
  CHECK(max_entry_diff(same.a, bell.a) < 1e-15);

  for (int trial = 0; trial < 25; ++trial) {
    const TwoPhotonState s = random_state(rng);
    const double before = concurrence(s);
    const TwoPhotonState rotated =
        apply_local(s, random_unitary(rng), random_unitary(rng));
    CHECK(std::abs(concurrence(rotated) - before) < 1e-12);
  }

  CHECK_THROWS_AS(apply_local(bell, Mat2::diag(2.0, 1.0), Mat2::identity()),
                  NotUnitary);
}

TEST_CASE("canonical_state hits the requested entanglement") {
  const TwoPhotonState full = canonical_state(1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(max_entry_diff(full.a, Mat2::diag(inv_sqrt2, inv_sqrt2)) < 1e-15);
  CHECK(max_entry_diff(canonical_state(0.0).a, Mat2::diag(1.0, 0.0)) == 0.0);

  const TwoPhotonState half = canonical_state(0.5);
  const double lp = 0.5 + 0.5 * std::sqrt(0.75);
  CHECK(std::abs(half.a(0, 0) - C64(std::sqrt(lp), 0.0)) < 1e-15);

  for (double p = 0.0; p <= 1.0; p += 0.05) {
    CHECK(std::abs(concurrence(canonical_state(p)) - p) < 1e-12);
  }
  CHECK_THROWS_AS(canonical_state(1.5), DomainError);
}

TEST_CASE("polar_params on a diagonal state") {
  const TwoPhotonState s =
      make_state(Mat2::diag(std::sqrt(0.8), std::sqrt(0.2)));
  const PolarParams p = polar_params(s, Mat2::identity(), Mat2::identity());
  CHECK(p.lambda_plus == doctest::Approx(0.8).epsilon(1e-13));
  CHECK(p.lambda_minus == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(p.u == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(p.v == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(p.big_phi == 0.0);
  CHECK(std::abs(p.lambda_plus + p.lambda_minus - 1.0) < 1e-10);
}

TEST_CASE("polar_params on the Bell pair reports the degenerate convention") {
  const PolarParams p = polar_params(make_state(bell_matrix()),
                                     Mat2::identity(), Mat2::identity());
  CHECK(p.lambda_plus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(p.lambda_minus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(p.u == 0.0);
  CHECK(p.v == 0.0);
  CHECK(p.big_phi == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("polar_params factors reconstruct the rotated state") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoPhotonState s = random_state(rng);
    if (1.0 - concurrence(s) < 1e-6) {
      continue;  // degenerate convention tested separately
    }
    const Mat2 u = random_unitary(rng);
    const Mat2 v = random_unitary(rng);
    const PolarParams p = polar_params(s, u, v);

    const Mat2 m = u * s.a * v;
    const Svd2 f = svd2(m);
    double alpha = 0.0;
    double beta = 0.0;
    const Mat2 l = su2_of(f.left, &alpha);
    const Mat2 r = su2_of(f.right, &beta);

    // Returned scalars describe exactly these SU(2) factors.
    CHECK(std::abs(std::norm(l(0, 0)) - 0.5 - p.u) < 1e-12);
    CHECK(std::abs(std::norm(r(0, 0)) - 0.5 - p.v) < 1e-12);
    CHECK(std::abs(std::remainder(alpha + beta - p.phi, 2.0 * kPi)) < 1e-12);
    const C64 prod = l(0, 0) * std::conj(l(0, 1)) * r(0, 0) * r(0, 1);
    if (std::abs(prod) > 1e-12) {
      CHECK(std::cos(p.big_phi) == doctest::Approx(std::cos(std::arg(prod)))
                                       .epsilon(1e-10));
      CHECK(std::sin(p.big_phi) == doctest::Approx(std::sin(std::arg(prod)))
                                       .epsilon(1e-10));
    }

    const Mat2 rebuilt =
        std::polar(1.0, p.phi) *
        (l * Mat2::diag(std::sqrt(p.lambda_plus), std::sqrt(p.lambda_minus)) *
         r);
    CHECK(max_entry_diff(rebuilt, m) < 1e-10);
  }
}

TEST_CASE("polar_params validates its rotations") {
  const TwoPhotonState s = make_state(bell_matrix());
  CHECK_THROWS_AS(polar_params(s, Mat2::diag(2.0, 1.0), Mat2::identity()),
                  NotUnitary);
}

TEST_CASE("chsh_correlation reproduces the singlet correlation") {
  const TwoPhotonState bell = make_state(bell_matrix());
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const MeasurementSetting n{uniform(rng, 0.0, kPi), uniform(rng, -kPi, kPi)};
    CHECK(chsh_correlation(bell, n, n) == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("chsh_max attains the pure-state maximum") {
  const ChshResult bell = chsh_max(make_state(bell_matrix()));
  CHECK(std::abs(bell.s - 2.0 * std::sqrt(2.0)) < 1e-6);

  const ChshResult product = chsh_max(make_state(Mat2::diag(1.0, 0.0)));
  CHECK(std::abs(product.s - 2.0) < 1e-6);

  const ChshResult partial = chsh_max(canonical_state(0.6));
  CHECK(std::abs(partial.s - 2.0 * std::sqrt(1.36)) < 1e-6);
}

TEST_CASE("chsh_max agrees with s_from_p on random states") {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoPhotonState s = random_state(rng);
    const ChshResult res = chsh_max(s);
    CHECK(std::abs(res.s - s_from_p(concurrence(s))) < 1e-6);
  }
}
