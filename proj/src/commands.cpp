#include "entrans/commands.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "entrans/errors.hpp"
#include "entrans/transfer.hpp"

namespace entrans {
namespace {

// 17 significant digits: lossless round trip for 64-bit floats.
std::string fmt(double x) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string fmt(const C64& z) {
  std::string out = fmt(z.real());
  const std::string im = fmt(z.imag());
  if (im.empty() || im[0] != '-') {
    out += '+';
  }
  return out + im + "i";
}

void put(std::ostream& out, const char* key, const std::string& value) {
  out << key << " = " << value << "\n";
}

void put_matrix(std::ostream& out, const char* prefix, const Mat2& m) {
  const std::string p(prefix);
  Mat2 copy = m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out << p << i << j << " = " << fmt(copy(i, j)) << "\n";
    }
  }
}

double ratio_s_max(double ratio) {
  return ratio >= 1.0 ? bounds(ratio, 1.0).s_max : bounds(1.0, 1.0 / ratio).s_max;
}

void put_verdict(std::ostream& out, double p_in, double tau1, double tau2) {
  if (p_in > 0.0) {
    const DistillationVerdict v = distillable(p_in, tau1, tau2);
    put(out, "distillable", v.feasible ? "1" : "0");
    put(out, "margin_diff", fmt(v.margin_diff));
    put(out, "margin_sum", fmt(v.margin_sum));
  } else {
    put(out, "distillable", "0");
  }
}

}  // namespace

void cmd_smax_sweep(const SweepGrid& grid, std::ostream& out) {
  if (grid.steps < 2) {
    throw ConfigError("sweep needs at least 2 steps");
  }
  if (!(grid.min < grid.max)) {
    throw ConfigError("sweep needs min < max");
  }
  if (grid.log_scale && !(grid.min > 0.0)) {
    throw ConfigError("log sweep needs min > 0");
  }
  out << grid.axis << ",s_max,s_max_quadratic\n";
  const double lo = grid.log_scale ? std::log(grid.min) : grid.min;
  const double hi = grid.log_scale ? std::log(grid.max) : grid.max;
  for (int k = 0; k <= grid.steps; ++k) {
    const double x = lo + (hi - lo) * k / grid.steps;
    const double ratio = grid.log_scale ? std::exp(x) : x;
    out << fmt(ratio) << ',' << fmt(ratio_s_max(ratio)) << ','
        << fmt(s_max_quadratic(ratio)) << "\n";
  }
}

void cmd_distill_region(double p_in, double ln_tau_max, int steps,
                        std::ostream& out) {
  if (!(ln_tau_max > 0.0) || steps < 2) {
    throw ConfigError("region grid needs ln_tau_max > 0 and steps >= 2");
  }
  if (!(p_in > 0.0) || !(p_in < 1.0)) {
    throw DomainError("input entanglement outside (0, 1)");
  }
  out << "ln_tau1,ln_tau2,feasible\n";
  for (int i = 0; i <= steps; ++i) {
    const double x = ln_tau_max * i / steps;
    for (int j = 0; j <= steps; ++j) {
      const double y = ln_tau_max * j / steps;
      const DistillationVerdict v =
          distillable(p_in, std::exp(x), std::exp(y));
      out << fmt(x) << ',' << fmt(y) << ',' << (v.feasible ? '1' : '0')
          << "\n";
    }
  }
  out << "\nedge,ln_tau1,ln_tau2\n";
  const auto edges = region_boundary(p_in, ln_tau_max, steps);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (const auto& point : edges[e]) {
      out << (e + 1) << ',' << fmt(point[0]) << ',' << fmt(point[1]) << "\n";
    }
  }
}

void cmd_transfer(const Scenario& sc, std::ostream& out) {
  const TwoPhotonState state = scenario_state(sc);
  const double p_in = concurrence(state);
  const auto [t1, t2] = scenario_media(sc);
  const TransferResult result = transmit(state, t1, t2);
  const TransferFrame frame = transfer_frame(t1, t2);
  const TransferBounds b = bounds(frame.tau1, frame.tau2);

  put(out, "p_in", fmt(p_in));
  put_matrix(out, "a_out_", result.state_out.a);
  put(out, "z", fmt(result.z));
  put(out, "p_out", fmt(result.p_out));
  put(out, "s_out", fmt(result.s_out));
  put(out, "tau1", fmt(frame.tau1));
  put(out, "tau1_capped", frame.capped1 ? "1" : "0");
  put(out, "tau2", fmt(frame.tau2));
  put(out, "tau2_capped", frame.capped2 ? "1" : "0");
  put(out, "p_min", fmt(b.p_min));
  put(out, "p_max", fmt(b.p_max));
  put(out, "s_max", fmt(b.s_max));
  put_verdict(out, p_in, frame.tau1, frame.tau2);
}

void cmd_plasmon(const Scenario& sc, std::ostream& out) {
  if (!sc.films.has_value()) {
    throw ConfigError("plasmon report needs film media, not explicit matrices");
  }
  const FilmScenario& films = *sc.films;
  const double omega0 = scenario_omega0(films);
  const auto [t1, t2] = film_pair(films.film1, films.film2, omega0);

  put(out, "omega0", fmt(omega0));
  const std::array<const PlasmonFilmSpec*, 2> specs = {&films.film1,
                                                       &films.film2};
  const std::array<const TransmissionMatrix*, 2> media = {&t1, &t2};
  std::array<double, 2> taus{};
  for (int i = 0; i < 2; ++i) {
    const PlasmonFilmSpec& f = *specs[i];
    const std::string p = "film" + std::to_string(i + 1) + "_";
    const double res_a = plasmon_resonance(f.lattice_a, f.order_n, f.epsilon);
    const double res_b = plasmon_resonance(f.lattice_b, f.order_n, f.epsilon);
    const TransmissionEigs eigs = transmission_eigs(*media[i]);
    taus[i] = tau(eigs);
    out << p << "resonance_a = " << fmt(res_a) << "\n";
    out << p << "resonance_b = " << fmt(res_b) << "\n";
    out << p << "t_a = " << fmt(lorentzian_t(omega0, res_a, f.gamma, f.t_peak))
        << "\n";
    out << p << "t_b = " << fmt(lorentzian_t(omega0, res_b, f.gamma, f.t_peak))
        << "\n";
    out << p << "tau = " << fmt(taus[i]) << "\n";
    out << p << "propagation_length = "
        << fmt(propagation_length(f.gamma, f.epsilon)) << "\n";
  }
  put(out, "ratio", fmt(taus[0] / taus[1]));
  // Closed form for film 1 rectangular against a square film, illuminated on
  // the lattice_a resonance.
  put(out, "symmetry_ratio_model",
      fmt(symmetry_ratio(films.film1.lattice_a, films.film1.lattice_b,
                         films.film1.order_n, films.film1.gamma,
                         films.film1.epsilon)));
}

void cmd_optimize(const Scenario& sc, std::uint64_t seed, std::ostream& out) {
  const TwoPhotonState state = scenario_state(sc);
  const double p_in = concurrence(state);
  const auto [t1, t2] = scenario_media(sc);
  OptimizeOptions opt;
  opt.seed = seed;
  const OptimizeReport report = optimize_incident(t1, t2, p_in, opt);
  const TransferFrame frame = transfer_frame(t1, t2);
  const TransferBounds b = bounds(frame.tau1, frame.tau2);

  put(out, "p_in", fmt(p_in));
  put(out, "seed", std::to_string(seed));
  put(out, "best_p_out", fmt(report.best_p_out));
  put(out, "iterations", std::to_string(report.iterations));
  put(out, "converged", report.converged ? "1" : "0");
  put_matrix(out, "input_", report.best_input.a);
  put(out, "tau1", fmt(frame.tau1));
  put(out, "tau2", fmt(frame.tau2));
  put(out, "p_max_bound", fmt(b.p_max));
  put_verdict(out, p_in, frame.tau1, frame.tau2);
}

}  // namespace entrans
