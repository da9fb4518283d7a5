#pragma once

// Analytic entanglement-transfer formulas, the attainable bounds, the
// distillation feasibility region, and the brute-force incident-state
// optimizer used to validate them.

#include <array>
#include <cstdint>
#include <vector>

#include "entrans/biphoton.hpp"
#include "entrans/media.hpp"

namespace entrans {

// Symmetry ratios above this are reported as the cap; a singular channel
// (T- = 0) has no finite ratio and the analytic formulas lose meaning there.
inline constexpr double kTauCap = 1e12;

struct TransferBounds {
  double p_min = 1.0;
  double p_max = 1.0;
  double s_max = 0.0;
};

struct DistillationVerdict {
  bool feasible = false;
  // Slack in |ln(tau1/tau2)| <= 2 arcosh(1/p_in) and
  // ln(tau1 tau2) >= 2 arcosh(1/p_in), natural-log units.
  double margin_diff = 0.0;
  double margin_sum = 0.0;
};

struct OptimizeReport {
  double best_p_out = 0.0;
  TwoPhotonState best_input;
  long long iterations = 0;
  bool converged = false;
};

struct OptimizeOptions {
  int restarts = 32;
  int max_iter = 2500;
  double ftol = 1e-11;
  std::uint64_t seed = 0;
};

// Frame in which the transfer formulas apply: rotating the state by (u, v)
// diagonalizes the two channels' action on the coincidence norm. The ratios
// are capped at kTauCap for singular channels.
struct TransferFrame {
  Mat2 u;
  Mat2 v;
  TransmissionEigs eigs1;
  TransmissionEigs eigs2;
  double tau1 = 1.0;
  double tau2 = 1.0;
  bool capped1 = false;
  bool capped2 = false;
};

struct YieldCheck {
  double z_times_pout = 0.0;
  bool ok = false;
};

// Output entanglement for given polar parameters and symmetry ratios. The
// printed form divides by (tau - 1) factors; this evaluates the equivalent
// cleared form, finite at tau = 1.
double p_out_general(double p_in, double lam_plus, double lam_minus, double u,
                     double v, double big_phi, double tau1, double tau2);

// Fully entangled input: P_out = 4 sqrt(tau1 tau2) /
// ((tau1+1)(tau2+1) + 4a(tau1-1)(tau2-1)), |a| <= 1/4.
double p_out_full_entangled(double tau1, double tau2, double a);

// Attainable range for a fully entangled input, and the matching maximal
// Bell-inequality violation.
TransferBounds bounds(double tau1, double tau2);

// Quadratic small-mismatch approximation 2 sqrt 2 (1 - (ratio-1)^2 / 16).
double s_max_quadratic(double ratio);

// Whether local filtering by these two channels can distill p_in up to 1.
DistillationVerdict distillable(double p_in, double tau1, double tau2);

// The three boundary edges of the feasibility strip in the
// (ln tau1, ln tau2) plane, each sampled with `steps` intervals.
std::vector<std::vector<std::array<double, 2>>> region_boundary(
    double p_in, double ln_tau_max, int steps);

// Maximizes the transmitted concurrence over local unitary dressings of the
// canonical input with concurrence p_in. Deterministic for a fixed seed.
OptimizeReport optimize_incident(const TransmissionMatrix& t1,
                                 const TransmissionMatrix& t2, double p_in,
                                 const OptimizeOptions& opt = {});

// Inequality Z * P_out <= p_in: filtering trades yield for entanglement but
// never creates it.
YieldCheck yield_check(double p_in, const TransferResult& result);

// |Z * P_out - p_in * sqrt(T1+ T1- T2+ T2-)|, the defect in the exact yield
// identity.
double yield_identity_gap(double p_in, const TransferResult& result,
                          const TransmissionEigs& eigs1,
                          const TransmissionEigs& eigs2);

// Eigenbases and capped ratios for the two channels, oriented so that
// polar_params(s, frame.u, frame.v) feeds p_out_general directly.
TransferFrame transfer_frame(const TransmissionMatrix& t1,
                             const TransmissionMatrix& t2);

}  // namespace entrans
