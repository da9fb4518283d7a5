#include "doctest.h"

#include <cmath>
#include <complex>

#include "entrans/biphoton.hpp"
#include "entrans/errors.hpp"
#include "entrans/media.hpp"
#include "entrans/transfer.hpp"
#include "test_support.hpp"

using namespace entrans;
using entrans::testutil::kPi;
using entrans::testutil::max_entry_diff;
using entrans::testutil::random_media;
using entrans::testutil::random_state;

namespace {

double kReachHalf() { return 2.0 * std::acosh(2.0); }

}  // namespace

TEST_CASE("p_out_general is the identity at tau = 1") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const double lam_plus = uniform(rng, 0.5, 1.0);
    const double lam_minus = 1.0 - lam_plus;
    const double p_in = 2.0 * std::sqrt(lam_plus * lam_minus);
    const double u = uniform(rng, -0.5, 0.5);
    const double v = uniform(rng, -0.5, 0.5);
    const double phi = uniform(rng, -kPi, kPi);
    CHECK(std::abs(p_out_general(p_in, lam_plus, lam_minus, u, v, phi, 1.0,
                                 1.0) -
                   p_in) < 1e-13);
  }
}

TEST_CASE("p_out_general reduces to the fully entangled form") {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const double u = uniform(rng, -0.5, 0.5);
    const double v = uniform(rng, -0.5, 0.5);
    const double phi = uniform(rng, -kPi, kPi);
    const double tau1 = std::exp(uniform(rng, 0.0, 3.0));
    const double tau2 = std::exp(uniform(rng, 0.0, 3.0));
    const double a =
        u * v - std::sqrt((0.25 - u * u) * (0.25 - v * v)) * std::cos(phi);
    CHECK(std::abs(p_out_general(1.0, 0.5, 0.5, u, v, phi, tau1, tau2) -
                   p_out_full_entangled(tau1, tau2, a)) < 1e-12);
  }
}

TEST_CASE("p_out_general matches brute-force transmission") {
  Rng rng(43);
  int used = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const TwoPhotonState s = random_state(rng);
    const TransmissionMatrix t1 = random_media(rng);
    const TransmissionMatrix t2 = random_media(rng);
    const TransferFrame frame = transfer_frame(t1, t2);
    if (frame.capped1 || frame.capped2) {
      continue;
    }
    const PolarParams p = polar_params(s, frame.u, frame.v);
    const double formula =
        p_out_general(concurrence(s), p.lambda_plus, p.lambda_minus, p.u, p.v,
                      p.big_phi, frame.tau1, frame.tau2);
    const double direct = transmit(s, t1, t2).p_out;
    CHECK(std::abs(formula - direct) < 1e-10);
    ++used;
  }
  CHECK(used >= 100);
}

TEST_CASE("p_out_general rejects inconsistent parameters") {
  CHECK_THROWS_AS(p_out_general(1.2, 0.5, 0.5, 0.0, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(p_out_general(0.6, 0.6, 0.3, 0.0, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(p_out_general(0.6, 0.1, 0.9, 0.0, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(p_out_general(0.2, 0.9, 0.1, 0.0, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(p_out_general(0.6, 0.9, 0.1, 0.7, 0.0, 0.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(p_out_general(0.6, 0.9, 0.1, 0.0, 0.0, 0.0, 0.5, 1.0),
                  DomainError);
}

TEST_CASE("p_out_full_entangled endpoints") {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const double tau1 = std::exp(uniform(rng, 0.0, 4.0));
    const double tau2 = std::exp(uniform(rng, 0.0, 4.0));
    const TransferBounds b = bounds(tau1, tau2);
    CHECK(std::abs(p_out_full_entangled(tau1, tau2, -0.25) - b.p_max) < 1e-13);
    CHECK(std::abs(p_out_full_entangled(tau1, tau2, 0.25) - b.p_min) < 1e-13);
  }
  CHECK(p_out_full_entangled(7.0, 7.0, -0.25) == 1.0);
  CHECK_THROWS_AS(p_out_full_entangled(2.0, 2.0, 0.3), DomainError);
}

TEST_CASE("bounds endpoints and symmetry") {
  const TransferBounds unit = bounds(1.0, 1.0);
  CHECK(unit.p_min == 1.0);
  CHECK(unit.p_max == 1.0);
  CHECK(unit.s_max == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

  const TransferBounds mismatch = bounds(2.4, 1.0);
  CHECK(std::abs(mismatch.s_max - 2.706) < 0.005);

  const TransferBounds strong = bounds(9.0, 1.0);
  CHECK(strong.p_min == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(strong.p_max == doctest::Approx(0.6).epsilon(1e-14));

  CHECK(std::abs(bounds(5.0, 2.0).p_max - bounds(2.0, 5.0).p_max) < 1e-15);
  CHECK(std::abs(bounds(5.0, 2.0).p_min - bounds(2.0, 5.0).p_min) < 1e-15);
  CHECK_THROWS_AS(bounds(0.9, 1.0), DomainError);
}

TEST_CASE("s_max_quadratic approximates the exact curve near 1") {
  CHECK(s_max_quadratic(1.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s_max_quadratic(1.1) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * (1.0 - 0.01 / 16.0))
            .epsilon(1e-15));
  CHECK(std::abs(bounds(1.05, 1.0).s_max - s_max_quadratic(1.05)) < 1e-4);
}

TEST_CASE("maximal violation decays with channel mismatch") {
  double prev = bounds(1.0, 1.0).s_max;
  for (int k = 1; k <= 40; ++k) {
    const double r = std::exp(std::log(20.0) * k / 40.0);
    const double s = bounds(r, 1.0).s_max;
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("distillable feasibility margins") {
  const double reach = kReachHalf();
  const DistillationVerdict v =
      distillable(0.5, std::exp(1.4), std::exp(1.4));
  CHECK(v.feasible);
  CHECK(v.margin_diff == doctest::Approx(reach).epsilon(1e-12));
  CHECK(v.margin_sum == doctest::Approx(2.8 - reach).epsilon(1e-10));

  CHECK_FALSE(distillable(0.5, 1.0, 1.0).feasible);
  CHECK_FALSE(distillable(0.5, std::exp(3.0), 1.0).feasible);

  CHECK(distillable(1.0, 4.0, 4.0).feasible);
  CHECK_FALSE(distillable(1.0, 4.0, 2.0).feasible);

  CHECK_THROWS_AS(distillable(0.0, 2.0, 2.0), DomainError);
  CHECK_THROWS_AS(distillable(1.2, 2.0, 2.0), DomainError);
  CHECK_THROWS_AS(distillable(0.5, 0.5, 2.0), DomainError);
}

TEST_CASE("region_boundary points sit on a binding constraint") {
  const double p_in = 0.5;
  const auto edges = region_boundary(p_in, 3.0, 40);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].size() == 41);
  CHECK(edges[1].size() == 41);
  CHECK(edges[2].size() == 41);
  for (const auto& edge : edges) {
    for (const auto& pt : edge) {
      const DistillationVerdict v =
          distillable(p_in, std::exp(pt[0]), std::exp(pt[1]));
      const double binding = std::min(std::abs(v.margin_diff),
                                      std::abs(v.margin_sum));
      CHECK(binding < 1e-9);
      CHECK(v.margin_diff >= -1e-9);
      CHECK(v.margin_sum >= -1e-9);
    }
  }
}

TEST_CASE("region_boundary drops edges outside the window") {
  // Weakly entangled input: the strip only enters the window on one side.
  const auto edges = region_boundary(0.1, 3.0, 10);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].size() == 11);
  CHECK(edges[1].empty());
  CHECK(edges[2].size() == 11);
  CHECK(edges[2].back()[0] == 3.0);

  CHECK_THROWS_AS(region_boundary(1.0, 3.0, 10), DomainError);
  CHECK_THROWS_AS(region_boundary(0.5, -1.0, 10), DomainError);
  CHECK_THROWS_AS(region_boundary(0.5, 3.0, 1), DomainError);
}

TEST_CASE("optimize_incident reaches the analytic maximum") {
  Rng rng(45);
  for (int trial = 0; trial < 3; ++trial) {
    const TransmissionMatrix t1 = random_media(rng, 0.1, 1.0);
    const TransmissionMatrix t2 = random_media(rng, 0.1, 1.0);
    const TransferFrame frame = transfer_frame(t1, t2);
    const double p_max = bounds(frame.tau1, frame.tau2).p_max;
    OptimizeOptions opt;
    opt.seed = 100 + trial;
    const OptimizeReport rep = optimize_incident(t1, t2, 1.0, opt);
    CHECK(rep.best_p_out > p_max - 1e-6);
    CHECK(rep.best_p_out < p_max + 1e-9);
    CHECK(std::abs(concurrence(rep.best_input) - 1.0) < 1e-10);
    CHECK(rep.iterations > 0);
  }
}

TEST_CASE("optimize_incident is invariant under channel rescaling") {
  Rng rng(46);
  const TransmissionMatrix t1 = random_media(rng, 0.1, 1.0);
  const TransmissionMatrix t2 = random_media(rng, 0.1, 1.0);
  OptimizeOptions opt;
  opt.seed = 7;
  const OptimizeReport base = optimize_incident(t1, t2, 1.0, opt);
  const C64 scale = 0.7 * std::polar(1.0, 0.8);
  const TransmissionMatrix t1s = make_transmission(scale * t1.t);
  const OptimizeReport scaled = optimize_incident(t1s, t2, 1.0, opt);
  CHECK(std::abs(scaled.best_p_out - base.best_p_out) < 1e-9);
}

TEST_CASE("optimize_incident is deterministic for a fixed seed") {
  Rng rng(47);
  const TransmissionMatrix t1 = random_media(rng, 0.1, 1.0);
  const TransmissionMatrix t2 = random_media(rng, 0.1, 1.0);
  OptimizeOptions opt;
  opt.restarts = 6;
  opt.seed = 11;
  const OptimizeReport a = optimize_incident(t1, t2, 0.8, opt);
  const OptimizeReport b = optimize_incident(t1, t2, 0.8, opt);
  CHECK(a.best_p_out == b.best_p_out);
  CHECK(a.iterations == b.iterations);
  CHECK(max_entry_diff(a.best_input.a, b.best_input.a) == 0.0);
}

TEST_CASE("optimize_incident cannot improve identity channels") {
  const TransmissionMatrix id = make_transmission(Mat2::identity());
  OptimizeOptions opt;
  opt.restarts = 4;
  const OptimizeReport rep = optimize_incident(id, id, 0.6, opt);
  CHECK(std::abs(rep.best_p_out - 0.6) < 1e-9);
  CHECK_THROWS_AS(optimize_incident(id, id, 0.0, opt), DomainError);
}

TEST_CASE("yield bound and identity") {
  const TransmissionMatrix id = make_transmission(Mat2::identity());
  const TwoPhotonState half = canonical_state(0.5);
  const TransferResult through = transmit(half, id, id);
  const YieldCheck ident = yield_check(0.5, through);
  CHECK(ident.ok);
  CHECK(ident.z_times_pout == doctest::Approx(0.5).epsilon(1e-12));

  Rng rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoPhotonState s = random_state(rng);
    const TransmissionMatrix t1 = random_media(rng);
    const TransmissionMatrix t2 = random_media(rng);
    const double p_in = concurrence(s);
    const TransferResult r = transmit(s, t1, t2);
    CHECK(yield_check(p_in, r).ok);
    CHECK(yield_identity_gap(p_in, r, transmission_eigs(t1),
                             transmission_eigs(t2)) < 1e-10);
  }
}

TEST_CASE("transfer_frame orients the channel eigenbases") {
  const TransmissionMatrix asc = make_transmission(Mat2::diag(0.3, 0.9));
  const TransmissionMatrix id = make_transmission(Mat2::identity());
  const TransferFrame frame = transfer_frame(asc, id);
  Mat2 swap = Mat2::zero();
  swap(0, 1) = C64(1.0, 0.0);
  swap(1, 0) = C64(1.0, 0.0);
  CHECK(max_entry_diff(frame.u, swap) < 1e-14);
  CHECK(frame.tau1 == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(frame.tau2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(frame.capped1);

  const TransferFrame capped =
      transfer_frame(id, make_transmission(Mat2::diag(1.0, 0.0)));
  CHECK(capped.capped2);
  CHECK(capped.tau2 == kTauCap);
}
