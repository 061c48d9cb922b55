#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gexlat/config.hpp"

namespace gexlat {

// Factory grids: n 1000..2000 step 100, beta 0.10..0.45 step 0.05.
std::vector<int> default_n_grid();
std::vector<double> default_beta_grid();

// One (n, beta) x trials grid run. Defaults mirror the 1000..2000-node setup.
struct SweepConfig {
  NetworkConfig base;
  std::vector<int> n_values = default_n_grid();
  std::vector<double> beta_values = default_beta_grid();
  int trials = 1;
  bool bound_only = false;           // closed forms only, one row per cell
  OrderPolicy order = OrderPolicy::kDegreeDescending;
  int empirical_n_cap = 4000;        // cells above this run bound-only
  int threads = 1;
  std::string out_path;              // empty -> stdout
  std::string format = "csv";        // csv | json
  std::string plot_path;             // optional SVG

  void validate() const;
};

// Everything measured and evaluated for one seeded instance. wall_seconds is
// timing telemetry only and never enters serialized artifacts, which must be
// byte-reproducible.
struct TrialResult {
  int n = 0;
  double beta = 0.0;
  int trial_index = 0;
  std::uint64_t derived_seed = 0;
  std::int64_t num_edges = 0;
  bool connected = false;
  int num_colors = 0;
  std::int64_t max_conflict_degree = 0;
  double delta_exact = 0.0;
  double delta_rate_bound = 0.0;
  bool rate_bound_valid = false;
  double delta_bound = 0.0;
  double delta_orderwise = 0.0;
  int clique_est_comm = 0;
  bool tin_all_satisfied = false;
  double wall_seconds = 0.0;
};

// Deterministic order-independent aggregates of one grid cell.
struct CellSummary {
  int n = 0;
  double beta = 0.0;
  int trials_done = 0;
  double mean_delta_exact = 0.0;
  double min_delta_exact = 0.0;
  double max_delta_exact = 0.0;
  double mean_delta_rate_bound = 0.0;
  double delta_bound = 0.0;
  double delta_orderwise = 0.0;
  double mean_num_edges = 0.0;
  double mean_num_colors = 0.0;
  int connected_count = 0;
  int tin_count = 0;
  bool connectivity_marginal = false;  // expected degree under ln(n)+3
};

struct SweepReport {
  std::vector<TrialResult> rows;   // sorted by (n, beta, trial)
  std::vector<CellSummary> cells;  // sorted by (n, beta)
  std::vector<std::string> notes;  // skipped cells, per-trial failures
  bool bound_only = false;
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Per-trial stream: mix64(base ^ (n*1e6 + beta_index*1e3 + trial)).
std::uint64_t derive_seed(std::uint64_t base_seed, int n, int beta_index,
                          int trial);

// place -> comm graph -> conflict coloring -> latency -> closed forms.
TrialResult run_trial(const NetworkConfig& cfg,
                      OrderPolicy order = OrderPolicy::kDegreeDescending);

// Runs the whole grid, possibly on several threads; the report is identical
// for any thread count. Per-trial failures become notes, the sweep continues.
SweepReport run_sweep(const SweepConfig& sweep);

// Built-in invariant battery (geometry oracles, coloring audits, TIN,
// determinism, parallel-equals-serial). Prints one line per suite; returns
// false if any suite failed.
bool run_self_checks(std::uint64_t seed, std::ostream& out);

// Flat key=value config text; keys are the SweepConfig / NetworkConfig field
// names. Unknown keys throw. Applied on top of the given defaults.
void apply_config_text(const std::string& text, SweepConfig& sweep);
SweepConfig load_sweep_config(const std::string& path, SweepConfig defaults = {});

}  // namespace gexlat
