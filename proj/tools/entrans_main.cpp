#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "entrans/commands.hpp"
#include "entrans/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

struct Args {
  std::string command;
  std::string config;
  std::string out_path;
  std::uint64_t seed = 0;
  double pin = 0.5;
  double ln_tau_max = 3.0;
  int sweep_steps = 200;
  int region_steps = 40;
};

int run(const Args& args, std::ostream& out) {
  using namespace entrans;
  if (args.command == "smax-sweep") {
    SweepGrid grid;
    grid.steps = args.sweep_steps;
    cmd_smax_sweep(grid, out);
  } else if (args.command == "distill-region") {
    cmd_distill_region(args.pin, args.ln_tau_max, args.region_steps, out);
  } else if (args.command == "transfer") {
    cmd_transfer(parse_scenario_file(args.config), out);
  } else if (args.command == "plasmon") {
    cmd_plasmon(parse_scenario_file(args.config), out);
  } else {
    cmd_optimize(parse_scenario_file(args.config), args.seed, out);
  }
  return 0;
}

int dispatch(const Args& args) {
  using namespace entrans;
  try {
    if (args.out_path.empty()) {
      return run(args, std::cout);
    }
    std::ofstream file(args.out_path);
    if (!file) {
      throw ConfigError("cannot open output file \"" + args.out_path + "\"");
    }
    const int code = run(args, file);
    file.flush();
    if (!file) {
      throw ConfigError("failed writing output file \"" + args.out_path +
                        "\"");
    }
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const FullyBlocked& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entanglement transfer through polarization-dependent scattering "
      "media: transfer reports, bound sweeps, distillation regions, and the "
      "plasmon film model."};
  app.require_subcommand(1);
  Args args;

  auto* transfer =
      app.add_subcommand("transfer", "Propagate a scenario and report the "
                                     "transmitted entanglement");
  transfer->add_option("--config", args.config, "Scenario file")->required();
  transfer->add_option("--out", args.out_path, "Output path (default stdout)");

  auto* sweep = app.add_subcommand(
      "smax-sweep", "Tabulate s_max against the symmetry ratio tau1/tau2 on "
                    "a log grid over [1/30, 30]");
  sweep->add_option("--steps", args.sweep_steps, "Grid intervals (default 200)");
  sweep->add_option("--out", args.out_path, "Output path (default stdout)");

  auto* region = app.add_subcommand(
      "distill-region", "Tabulate the distillation feasibility region in the "
                        "(ln tau1, ln tau2) plane");
  region->add_option("--pin", args.pin, "Input entanglement degree")
      ->required();
  region->add_option("--ln-tau-max", args.ln_tau_max,
                     "Grid extent (default 3)");
  region->add_option("--steps", args.region_steps,
                     "Grid intervals per axis (default 40)");
  region->add_option("--out", args.out_path, "Output path (default stdout)");

  auto* plasmon = app.add_subcommand(
      "plasmon", "Report the Lorentzian film model for a film-pair scenario");
  plasmon->add_option("--config", args.config, "Scenario file")->required();
  plasmon->add_option("--out", args.out_path, "Output path (default stdout)");

  auto* optimize = app.add_subcommand(
      "optimize", "Search incident-state dressings maximizing the "
                  "transmitted entanglement");
  optimize->add_option("--config", args.config, "Scenario file")->required();
  optimize->add_option("--seed", args.seed, "Optimizer seed (default 0)");
  optimize->add_option("--out", args.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  for (const CLI::App* sub :
       {transfer, sweep, region, plasmon, optimize}) {
    if (sub->parsed()) {
      args.command = sub->get_name();
      break;
    }
  }
  return dispatch(args);
}
