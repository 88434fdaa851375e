#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "unruhbell/chsh.hpp"
#include "unruhbell/closed_forms.hpp"
#include "unruhbell/fock.hpp"
#include "unruhbell/invariants.hpp"
#include "unruhbell/measures.hpp"
#include "unruhbell/svg_plot.hpp"
#include "unruhbell/sweep.hpp"

namespace {

using namespace unruhbell;

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

UnruhParams params_from_flags(double r, double q_r_abs, double q_phase) {
  const double q_l_abs = std::sqrt(std::max(0.0, 1.0 - q_r_abs * q_r_abs));
  const Complex q_l(q_l_abs * std::cos(q_phase), q_l_abs * std::sin(q_phase));
  return UnruhParams(r, q_r_abs, q_l);
}

int cmd_sweep(const SweepOptions& options, const std::string& csv_path,
              const std::string& svg_path) {
  const std::vector<SweepRecord> records = run_sweep(options);

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) {
    std::cerr << "error: cannot open '" << csv_path << "' for writing\n";
    return exit_io;
  }
  write_csv(records, csv);
  csv.flush();
  if (!csv) {
    std::cerr << "error: failed while writing '" << csv_path << "'\n";
    return exit_io;
  }

  if (!svg_path.empty()) {
    SweepOptions reference_options = options;
    reference_options.q_r_abs = 1.0;
    reference_options.q_phase = 0.0;
    const std::vector<SweepRecord> reference = run_sweep(reference_options);
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) {
      std::cerr << "error: cannot open '" << svg_path << "' for writing\n";
      return exit_io;
    }
    svg << render_sweep_svg(records, reference);
    svg.flush();
    if (!svg) {
      std::cerr << "error: failed while writing '" << svg_path << "'\n";
      return exit_io;
    }
  }

  std::cout << "wrote " << records.size() << " rows to " << csv_path;
  if (!svg_path.empty()) std::cout << " and figures to " << svg_path;
  std::cout << "\n";
  return exit_ok;
}

int cmd_state(double r, double q_r_abs, double q_phase,
              const std::string& initial, const std::string& observer,
              const std::string& sector) {
  const auto sign = parse_initial_sign(initial);
  const auto obs = parse_observer(observer);
  const auto sec = parse_sector(sector);
  if (!sign || !obs || !sec) {
    std::cerr << "error: invalid state selector; expected plus|minus, "
                 "rob|antirob, particle|antiparticle\n";
    return exit_usage;
  }
  const UnruhParams params = params_from_flags(r, q_r_abs, q_phase);
  const ReductionSpec spec{*sign, *obs, *sec};

  const TwoQubitDensity rho =
      reduce(initial_state(params, spec.initial_sign), spec.observer,
             spec.sector);

  std::printf("reduced state %s at r=%.6f, |q_r|=%.6f, q_l phase %.6f\n\n",
              to_string(spec).c_str(), params.r(), q_r_abs, q_phase);
  for (int row = 0; row < 4; ++row) {
    std::printf("  [");
    for (int col = 0; col < 4; ++col) {
      const Complex v = rho.m(row, col);
      std::printf(" %9.6f%+9.6fi", v.real(), v.imag());
    }
    std::printf(" ]\n");
  }

  const double horodecki = horodecki_max(rho);
  const double analytic = analytic_bmax(params, spec);
  std::printf("\n");
  std::printf("concurrence     = %.6f\n", concurrence(rho));
  std::printf("negativity      = %.6f\n", negativity(rho));
  std::printf("chsh_horodecki  = %.6f\n", horodecki);
  std::printf("chsh_analytic   = %.6f\n", analytic);
  std::printf("chsh_violation  = %s\n",
              horodecki > 2.0 + 1e-9 ? "true" : "false");
  return exit_ok;
}

int cmd_check(int grid) {
  const std::vector<SuiteResult> results =
      run_invariant_suites(CheckOptions{grid});

  std::printf("invariant suites on a %dx%d (r, alpha) grid, phases "
              "{0, pi/3, pi/2}\n\n",
              grid, grid);
  std::printf("  %-32s %9s %6s %15s %11s\n", "suite", "checks", "fail",
              "worst residual", "tolerance");
  bool all_passed = true;
  for (const SuiteResult& suite : results) {
    std::printf("  %-32s %9lld %6lld %15.3e %11.1e\n", suite.name.c_str(),
                suite.checks, suite.failures, suite.worst, suite.tolerance);
    if (!suite.passed()) {
      all_passed = false;
      std::printf("    worst at %s\n", suite.worst_at.c_str());
    }
  }
  if (!all_passed) {
    std::printf("\ninvariant failures detected\n");
    return exit_invariant;
  }
  std::printf("\nall %zu suites passed\n", results.size());
  return exit_ok;
}

int cmd_accel(double omega, double accel, double light_speed, double q_r_abs) {
  const double r = accel_to_r({omega, accel, light_speed});
  const UnruhParams params = params_from_flags(r, q_r_abs, 0.0);

  std::printf("r = %.6f\n", r);
  const ReductionSpec plus_family[4] = {
      {InitialSign::plus, Observer::rob, Sector::particle},
      {InitialSign::plus, Observer::rob, Sector::antiparticle},
      {InitialSign::plus, Observer::antirob, Sector::particle},
      {InitialSign::plus, Observer::antirob, Sector::antiparticle},
  };
  for (const ReductionSpec& spec : plus_family) {
    char label[40];
    std::snprintf(label, sizeof label, "%s %s", to_string(spec.observer).data(),
                  to_string(spec.sector).data());
    std::printf("chsh_analytic %-22s = %.6f\n", label,
                analytic_bmax(params, spec));
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Unruh-mode entanglement versus CHSH nonlocality"};
  app.require_subcommand(1);

  // sweep
  SweepOptions sweep_options;
  std::string csv_path;
  std::string svg_path;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "sweep r over [0, pi/4] and write all reduced-state measures");
  sweep_cmd->add_option("--qr", sweep_options.q_r_abs, "|q_r| of the Unruh mode")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--phase", sweep_options.q_phase, "phase of q_l");
  sweep_cmd->add_option("--points", sweep_options.points, "r grid nodes")
      ->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--out", csv_path, "CSV output path")->required();
  sweep_cmd->add_option("--svg", svg_path, "optional SVG figure path");

  // state
  double state_r = 0.0;
  double state_qr = 1.0;
  double state_phase = 0.0;
  std::string state_initial;
  std::string state_observer;
  std::string state_sector;
  CLI::App* state_cmd = app.add_subcommand(
      "state", "print one reduced density matrix and its measures");
  state_cmd->add_option("--r", state_r, "squeezing angle in [0, pi/4]")
      ->required);
  state_cmd->add_option("--qr", state_qr, "|q_r|")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  state_cmd->add_option("--phase", state_phase, "phase of q_l");
  state_cmd->add_option("--initial", state_initial, "plus|minus")->required();
  state_cmd->add_option("--observer", state_observer, "rob|antirob")
      ->required();
  state_cmd->add_option("--sector", state_sector, "particle|antiparticle")
      ->required();

  // check
  int grid = 50;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run every module invariant suite");
  check_cmd->add_option("--grid", grid, "(r, alpha) nodes per axis")
      ->check(CLI::Range(2, 100000));

  // accel
  double omega = 0.0;
  double accel = 0.0;
  double light_speed = 299792458.0;
  double accel_qr = 1.0;
  CLI::App* accel_cmd = app.add_subcommand(
      "accel", "map a physical acceleration onto r and the CHSH maxima");
  accel_cmd->add_option("--omega", omega, "mode angular frequency [rad/s]")
      ->required();
  accel_cmd->add_option("--a", accel, "proper acceleration [m/s^2]")
      ->required();
  accel_cmd->add_option("--c", light_speed, "speed of light [m/s]");
  accel_cmd->add_option("--qr", accel_qr, "|q_r|")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep_options, csv_path, svg_path);
    }
    if (state_cmd->parsed()) {
      return cmd_state(state_r, state_qr, state_phase, state_initial,
                       state_observer, state_sector);
    }
    if (check_cmd->parsed()) {
      return cmd_check(grid);
    }
    if (accel_cmd->parsed()) {
      return cmd_accel(omega, accel, light_speed, accel_qr);
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const SettingsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invariant;
  }
  return exit_usage;
}
