#include "entrans/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "entrans/errors.hpp"
#include "entrans/nelder_mead.hpp"
#include "entrans/rng.hpp"

namespace entrans {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double clamp(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

double checked_unit_interval(double x, const char* what) {
  if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-12) {
    throw DomainError(std::string(what) + " outside [0, 1]");
  }
  return clamp(x, 0.0, 1.0);
}

double checked_tau(double t, const char* what) {
  if (!std::isfinite(t) || t < 1.0 - 1e-12) {
    throw DomainError(std::string(what) + " must be a finite ratio >= 1");
  }
  return std::max(t, 1.0);
}

// Results provably in [0, 1] may stick out by rounding only.
double clamp_result(double p) {
  if (!std::isfinite(p) || p < -1e-10 || p > 1.0 + 1e-10) {
    throw InternalError("entanglement result outside [0, 1] beyond rounding");
  }
  return clamp(p, 0.0, 1.0);
}

double capped_ratio(const TransmissionEigs& e, bool* capped) {
  if (e.t_minus <= 0.0) {
    *capped = true;
    return kTauCap;
  }
  const double ratio = std::max(e.t_plus / e.t_minus, 1.0);
  if (ratio > kTauCap) {
    *capped = true;
    return kTauCap;
  }
  *capped = false;
  return ratio;
}

}  // namespace

double p_out_general(double p_in, double lam_plus, double lam_minus, double u,
                     double v, double big_phi, double tau1, double tau2) {
  p_in = checked_unit_interval(p_in, "input entanglement");
  lam_plus = checked_unit_interval(lam_plus, "lambda+");
  lam_minus = checked_unit_interval(lam_minus, "lambda-");
  if (std::abs(lam_plus + lam_minus - 1.0) > 1e-10 || lam_plus < lam_minus) {
    throw DomainError("lambda pair must be ordered and sum to 1");
  }
  if (std::abs(2.0 * std::sqrt(lam_plus * lam_minus) - p_in) > 1e-8) {
    throw DomainError("input entanglement inconsistent with lambda pair");
  }
  if (!std::isfinite(u) || !std::isfinite(v) || std::abs(u) > 0.5 + 1e-12 ||
      std::abs(v) > 0.5 + 1e-12) {
    throw DomainError("polar parameters u, v outside [-1/2, 1/2]");
  }
  if (!std::isfinite(big_phi)) {
    throw DomainError("polar phase must be finite");
  }
  u = clamp(u, -0.5, 0.5);
  v = clamp(v, -0.5, 0.5);
  tau1 = checked_tau(tau1, "tau1");
  tau2 = checked_tau(tau2, "tau2");

  if (p_in == 0.0) {
    return 0.0;
  }

  const double f1 = u * (tau1 - 1.0);
  const double g1 = 0.5 * (tau1 + 1.0);
  const double f2 = v * (tau2 - 1.0);
  const double g2 = 0.5 * (tau2 + 1.0);
  const double cross = std::sqrt((0.25 - u * u) * (0.25 - v * v));
  const double denom = lam_plus * (f1 + g1) * (f2 + g2) +
                       lam_minus * (f1 - g1) * (f2 - g2) -
                       2.0 * std::sqrt(lam_plus * lam_minus) * (tau1 - 1.0) *
                           (tau2 - 1.0) * cross * std::cos(big_phi);
  if (!(denom > 0.0)) {
    throw InternalError("transfer denominator not positive");
  }
  return clamp_result(p_in * std::sqrt(tau1 * tau2) / denom);
}

double p_out_full_entangled(double tau1, double tau2, double a) {
  tau1 = checked_tau(tau1, "tau1");
  tau2 = checked_tau(tau2, "tau2");
  if (!std::isfinite(a) || std::abs(a) > 0.25 + 1e-12) {
    throw DomainError("interference parameter outside [-1/4, 1/4]");
  }
  a = clamp(a, -0.25, 0.25);
  const double denom = (tau1 + 1.0) * (tau2 + 1.0) +
                       4.0 * a * (tau1 - 1.0) * (tau2 - 1.0);
  if (!(denom > 0.0)) {
    throw InternalError("transfer denominator not positive");
  }
  return clamp_result(4.0 * std::sqrt(tau1 * tau2) / denom);
}

TransferBounds bounds(double tau1, double tau2) {
  tau1 = checked_tau(tau1, "tau1");
  tau2 = checked_tau(tau2, "tau2");
  TransferBounds b;
  const double prod = std::sqrt(tau1 * tau2);
  const double ratio = std::sqrt(tau1 / tau2);
  b.p_min = clamp_result(2.0 * prod / (1.0 + prod * prod));
  b.p_max = clamp_result(2.0 * ratio / (1.0 + ratio * ratio));
  b.s_max = s_from_p(b.p_max);
  return b;
}

double s_max_quadratic(double ratio) {
  const double d = ratio - 1.0;
  return 2.0 * std::sqrt(2.0) * (1.0 - d * d / 16.0);
}

DistillationVerdict distillable(double p_in, double tau1, double tau2) {
  if (!std::isfinite(p_in) || p_in <= 0.0 || p_in > 1.0 + 1e-12) {
    throw DomainError("input entanglement outside (0, 1]");
  }
  p_in = std::min(p_in, 1.0);
  tau1 = checked_tau(tau1, "tau1");
  tau2 = checked_tau(tau2, "tau2");
  const double reach = 2.0 * std::acosh(1.0 / p_in);
  DistillationVerdict v;
  v.margin_diff = reach - std::abs(std::log(tau1 / tau2));
  v.margin_sum = std::log(tau1) + std::log(tau2) - reach;
  v.feasible = v.margin_diff >= 0.0 && v.margin_sum >= 0.0;
  return v;
}

std::vector<std::vector<std::array<double, 2>>> region_boundary(
    double p_in, double ln_tau_max, int steps) {
  if (!std::isfinite(p_in) || p_in <= 0.0 || p_in >= 1.0) {
    throw DomainError("input entanglement outside (0, 1)");
  }
  if (!(ln_tau_max > 0.0) || steps < 2) {
    throw DomainError("boundary sampling needs ln_tau_max > 0 and steps >= 2");
  }
  const double reach = 2.0 * std::acosh(1.0 / p_in);
  const auto segment = [steps](double x0, double x1, auto&& f) {
    std::vector<std::array<double, 2>> line;
    if (x1 < x0) {
      return line;
    }
    line.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
      const double x = x0 + (x1 - x0) * k / steps;
      line.push_back({x, f(x)});
    }
    return line;
  };
  std::vector<std::vector<std::array<double, 2>>> out;
  // Edge ln tau2 - ln tau1 = reach, then its mirror, then the transverse
  // edge ln tau1 + ln tau2 = reach joining them.
  out.push_back(segment(0.0, ln_tau_max, [reach](double x) { return x + reach; }));
  out.push_back(
      segment(reach, ln_tau_max, [reach](double x) { return x - reach; }));
  out.push_back(segment(0.0, std::min(reach, ln_tau_max),
                        [reach](double x) { return reach - x; }));
  return out;
}

OptimizeReport optimize_incident(const TransmissionMatrix& t1,
                                 const TransmissionMatrix& t2, double p_in,
                                 const OptimizeOptions& opt) {
  if (!std::isfinite(p_in) || p_in <= 0.0 || p_in > 1.0 + 1e-12) {
    throw DomainError("input entanglement outside (0, 1]");
  }
  p_in = std::min(p_in, 1.0);
  const TwoPhotonState base = canonical_state(p_in);

  // Any value strictly above what is reachable would indicate a defect;
  // reaching it up to rounding ends the restart loop.
  double target = 1.0;
  if (p_in >= 1.0 - 1e-12) {
    const TransmissionEigs e1 = transmission_eigs(t1);
    const TransmissionEigs e2 = transmission_eigs(t2);
    if (e1.t_minus > 0.0 && e2.t_minus > 0.0) {
      target = bounds(tau(e1), tau(e2)).p_max;
    }
  }

  const auto objective = [&](const std::vector<double>& x) {
    const Mat2 lu = su2_from_angles(x[0], x[1], x[2]);
    const Mat2 rv = su2_from_angles(x[3], x[4], x[5]);
    try {
      return -transmit(TwoPhotonState{lu * base.a * rv}, t1, t2).p_out;
    } catch (const FullyBlocked&) {
      return 0.0;
    }
  };

  NelderMeadOptions nm;
  nm.max_iter = opt.max_iter;
  nm.ftol = opt.ftol;
  nm.init_step = 0.7;

  Rng rng(opt.seed);
  std::vector<double> best_x(6, 0.0);
  double best = -1.0;
  long long evaluations = 0;
  bool converged = false;

  const int restarts = std::max(1, opt.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x0(6);
    if (r == 0) {
      std::fill(x0.begin(), x0.end(), 0.0);
    } else {
      x0[0] = uniform(rng, -kPi, kPi);
      x0[1] = uniform(rng, 0.0, kPi);
      x0[2] = uniform(rng, -kPi, kPi);
      x0[3] = uniform(rng, -kPi, kPi);
      x0[4] = uniform(rng, 0.0, kPi);
      x0[5] = uniform(rng, -kPi, kPi);
    }
    const NelderMeadResult res = nelder_mead(objective, x0, nm);
    evaluations += res.evaluations;
    if (-res.f > best) {
      best = -res.f;
      best_x = res.x;
      converged = res.converged;
    }
    if (target - best <= 1e-10) {
      break;
    }
  }

  NelderMeadOptions polish = nm;
  polish.init_step = 0.02;
  const NelderMeadResult res = nelder_mead(objective, best_x, polish);
  evaluations += res.evaluations;
  if (-res.f > best) {
    best = -res.f;
    best_x = res.x;
    converged = res.converged;
  }

  OptimizeReport report;
  report.best_p_out = best;
  report.best_input = apply_local(base, su2_from_angles(best_x[0], best_x[1], best_x[2]),
                                  su2_from_angles(best_x[3], best_x[4], best_x[5]));
  report.iterations = evaluations;
  report.converged = converged;
  return report;
}

YieldCheck yield_check(double p_in, const TransferResult& result) {
  YieldCheck c;
  c.z_times_pout = result.z * result.p_out;
  c.ok = c.z_times_pout <= p_in + 1e-12;
  return c;
}

double yield_identity_gap(double p_in, const TransferResult& result,
                          const TransmissionEigs& eigs1,
                          const TransmissionEigs& eigs2) {
  const double det_product = std::sqrt(eigs1.t_plus * eigs1.t_minus *
                                       eigs2.t_plus * eigs2.t_minus);
  return std::abs(result.z * result.p_out - p_in * det_product);
}

TransferFrame transfer_frame(const TransmissionMatrix& t1,
                             const TransmissionMatrix& t2) {
  TransferFrame frame;
  frame.eigs1 = transmission_eigs(t1);
  frame.eigs2 = transmission_eigs(t2);
  frame.tau1 = capped_ratio(frame.eigs1, &frame.capped1);
  frame.tau2 = capped_ratio(frame.eigs2, &frame.capped2);
  // The coincidence norm is Tr[(t1^dag t1) a ((t2^dag t2))^t a^dag], so the
  // state must be rotated into the eigenbasis of t1^dag t1 on the left and
  // of the transposed t2^dag t2 on the right.
  frame.u = herm_eig(adjoint(t1.t) * t1.t).basis;
  frame.v = adjoint(herm_eig(transpose(adjoint(t2.t) * t2.t)).basis);
  return frame;
}

}  // namespace entrans
