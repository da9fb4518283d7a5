#pragma once

// Command implementations behind the CLI subcommands. Each writes a
// deterministic plain-text or CSV report to the given stream.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "entrans/scenario.hpp"

namespace entrans {

struct SweepGrid {
  std::string axis = "ratio";
  double min = 1.0 / 30.0;
  double max = 30.0;
  int steps = 200;
  bool log_scale = true;
};

// CSV: ratio, s_max, s_max_quadratic over the grid (steps intervals,
// steps + 1 rows).
void cmd_smax_sweep(const SweepGrid& grid, std::ostream& out);

// CSV grid of (ln tau1, ln tau2, feasible) followed by the boundary edges.
void cmd_distill_region(double p_in, double ln_tau_max, int steps,
                        std::ostream& out);

// Propagates the scenario's state through its media and reports the output
// state, yield, entanglement, symmetry ratios, bounds, and the distillation
// verdict.
void cmd_transfer(const Scenario& sc, std::ostream& out);

// Reports the film model quantities: resonances, transmissions at omega0,
// symmetry ratios, and the closed-form ratio for the tuned configuration.
void cmd_plasmon(const Scenario& sc, std::ostream& out);

// Runs the incident-state optimizer and reports the best dressing found
// against the analytic bound and the distillation verdict.
void cmd_optimize(const Scenario& sc, std::uint64_t seed, std::ostream& out);

}  // namespace entrans
