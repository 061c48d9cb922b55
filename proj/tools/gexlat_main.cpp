// gexlat — gradient-exchange latency over wireless geometric topologies.
//
// Subcommands:
//   bound     closed-form evaluation for one (n, beta) cell
//   simulate  seeded Monte-Carlo trials for one cell
//   sweep     (n, beta) grid, CSV/JSON rows plus optional SVG chart
//   check     built-in invariant suites
//
// Exit codes: 0 ok, 1 invalid config, 2 runtime failure, 3 check failure.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gexlat/bounds.hpp"
#include "gexlat/emit.hpp"
#include "gexlat/harness.hpp"

namespace {

struct CliOptions {
  gexlat::SweepConfig sweep;
  std::string config_path;
  std::string exchange_mode = "edge";
  std::string order = "degree";
  int nodes = 1000;
  double beta = 0.3;
  int trials = 1;
};

void add_physics_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--nodes", o.nodes, "node count");
  cmd->add_option("--beta", o.beta, "density exponent, in (0, 0.5)");
  cmd->add_option("--radius-m", o.sweep.base.radius_m, "disk radius [m]");
  cmd->add_option("--power-dbm", o.sweep.base.power_dbm, "transmit power [dBm]");
  cmd->add_option("--noise-dbm-hz", o.sweep.base.noise_psd_dbm_hz,
                  "noise PSD [dBm/Hz]");
  cmd->add_option("--bandwidth-hz", o.sweep.base.bandwidth_hz, "bandwidth [Hz]");
  cmd->add_option("--pathloss-exp", o.sweep.base.alpha, "path-loss exponent");
  cmd->add_option("--ref-gain", o.sweep.base.ref_gain, "channel gain at 1 m");
  cmd->add_option("--seed", o.sweep.base.seed, "base RNG seed");
  cmd->add_option("--exchange-mode", o.exchange_mode,
                  "payload accounting: edge | direction");
  cmd->add_option("--config", o.config_path, "key=value config file");
}

void add_output_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--out", o.sweep.out_path, "output path (default stdout)");
  cmd->add_option("--format", o.sweep.format, "csv | json");
}

// File first, then flags the user actually passed on top.
void finalize(CLI::App* cmd, CliOptions& o) {
  if (!o.config_path.empty()) {
    gexlat::SweepConfig from_file =
        gexlat::load_sweep_config(o.config_path, o.sweep);
    // flags that were given explicitly win over the file
    const gexlat::SweepConfig flag_values = o.sweep;
    o.sweep = from_file;
    if (cmd->count("--radius-m")) o.sweep.base.radius_m = flag_values.base.radius_m;
    if (cmd->count("--power-dbm")) o.sweep.base.power_dbm = flag_values.base.power_dbm;
    if (cmd->count("--noise-dbm-hz"))
      o.sweep.base.noise_psd_dbm_hz = flag_values.base.noise_psd_dbm_hz;
    if (cmd->count("--bandwidth-hz"))
      o.sweep.base.bandwidth_hz = flag_values.base.bandwidth_hz;
    if (cmd->count("--pathloss-exp")) o.sweep.base.alpha = flag_values.base.alpha;
    if (cmd->count("--ref-gain")) o.sweep.base.ref_gain = flag_values.base.ref_gain;
    if (cmd->count("--seed")) o.sweep.base.seed = flag_values.base.seed;
    if (cmd->count("--out")) o.sweep.out_path = flag_values.out_path;
    if (cmd->count("--format")) o.sweep.format = flag_values.format;
    if (!cmd->count("--nodes") && o.sweep.base.n > 0) o.nodes = o.sweep.base.n;
    if (!cmd->count("--beta")) o.beta = o.sweep.base.beta;
    if (!cmd->count("--exchange-mode"))
      o.exchange_mode = gexlat::to_string(o.sweep.base.exchange_mode);
  }
  o.sweep.base.exchange_mode = gexlat::parse_exchange_mode(o.exchange_mode);
  o.sweep.base.n = o.nodes;
  o.sweep.base.beta = o.beta;
}

int run_bound(CLI::App* cmd, CliOptions& o) {
  finalize(cmd, o);
  o.sweep.base.validate();
  const gexlat::BoundReport rep = gexlat::evaluate_bounds(o.sweep.base);
  const std::string body = o.sweep.format == "json"
                               ? gexlat::bound_report_json(o.sweep.base, rep)
                               : gexlat::bound_report_csv(o.sweep.base, rep);
  if (o.sweep.out_path.empty())
    std::cout << body;
  else
    gexlat::write_text_file(o.sweep.out_path, body);
  return 0;
}

int run_cell_or_sweep(CLI::App* cmd, CliOptions& o, bool single_cell) {
  finalize(cmd, o);
  if (cmd->count("--trials")) o.sweep.trials = o.trials;
  o.sweep.order = gexlat::parse_order_policy(o.order);
  if (single_cell) {
    o.sweep.n_values = {o.nodes};
    o.sweep.beta_values = {o.beta};
    o.sweep.bound_only = false;
  } else {
    // --nodes/--beta act as grid overrides only when given explicitly
    if (cmd->count("--nodes")) o.sweep.n_values = {o.nodes};
    if (cmd->count("--beta")) o.sweep.beta_values = {o.beta};
  }
  const gexlat::SweepReport report = gexlat::run_sweep(o.sweep);
  gexlat::emit_outputs(report, o.sweep);
  for (const std::string& note : report.notes) std::cerr << note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradient-exchange latency simulator and bound evaluator"};
  app.require_subcommand(1);

  CliOptions o;
  std::string n_values_text, beta_values_text;

  CLI::App* bound = app.add_subcommand("bound", "closed-form bounds for one cell");
  add_physics_flags(bound, o);
  add_output_flags(bound, o);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte-Carlo trials for one cell");
  add_physics_flags(simulate, o);
  add_output_flags(simulate, o);
  simulate->add_option("--trials", o.trials, "trials per cell");
  simulate->add_option("--order", o.order, "coloring order: input | degree");
  simulate->add_option("--threads", o.sweep.threads, "worker threads");
  simulate->add_option("--emit-plot", o.sweep.plot_path, "write an SVG chart here");

  CLI::App* sweep = app.add_subcommand("sweep", "(n, beta) grid run");
  add_physics_flags(sweep, o);
  add_output_flags(sweep, o);
  sweep->add_option("--trials", o.trials, "trials per cell");
  sweep->add_option("--order", o.order, "coloring order: input | degree");
  sweep->add_option("--threads", o.sweep.threads, "worker threads");
  sweep->add_option("--n-values", n_values_text, "comma list, default 1000..2000 step 100");
  sweep->add_option("--beta-values", beta_values_text, "comma list, default 0.10..0.45 step 0.05");
  sweep->add_flag("--bound-only", o.sweep.bound_only, "skip simulation, closed forms only");
  sweep->add_option("--n-cap", o.sweep.empirical_n_cap,
                    "largest n simulated empirically");
  sweep->add_option("--emit-plot", o.sweep.plot_path, "write an SVG chart here");

  CLI::App* check = app.add_subcommand("check", "run the invariant suites");
  check->add_option("--seed", o.sweep.base.seed, "base RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (bound->parsed()) return run_bound(bound, o);
    if (simulate->parsed()) return run_cell_or_sweep(simulate, o, true);
    if (sweep->parsed()) {
      if (!n_values_text.empty()) {
        o.sweep.n_values.clear();
        std::string tmp = "n_values=" + n_values_text + "\n";
        gexlat::apply_config_text(tmp, o.sweep);
      }
      if (!beta_values_text.empty()) {
        std::string tmp = "beta_values=" + beta_values_text + "\n";
        gexlat::apply_config_text(tmp, o.sweep);
      }
      return run_cell_or_sweep(sweep, o, false);
    }
    if (check->parsed())
      return gexlat::run_self_checks(o.sweep.base.seed, std::cout) ? 0 : 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
