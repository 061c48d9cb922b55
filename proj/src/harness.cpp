#include "gexlat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gexlat/bounds.hpp"
#include "gexlat/channel.hpp"
#include "gexlat/emit.hpp"
#include "gexlat/geometry.hpp"
#include "gexlat/scheduler.hpp"

namespace gexlat {

std::vector<int> default_n_grid() {
  std::vector<int> grid;
  for (int n = 1000; n <= 2000; n += 100) grid.push_back(n);
  return grid;
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid;
  // built from integer percents so the doubles are reproducible
  for (int pct = 10; pct <= 45; pct += 5)
    grid.push_back(static_cast<double>(pct) / 100.0);
  return grid;
}

void SweepConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("n grid is empty");
  if (beta_values.empty()) throw std::invalid_argument("beta grid is empty");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (empirical_n_cap < 2) throw std::invalid_argument("n cap must be >= 2");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");
  for (int n : n_values) {
    for (double beta : beta_values) {
      NetworkConfig cell = base;
      cell.n = n;
      cell.beta = beta;
      cell.validate();
    }
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t derive_seed(std::uint64_t base_seed, int n, int beta_index,
                          int trial) {
  const std::uint64_t cell = static_cast<std::uint64_t>(n) * 1000000ULL +
                             static_cast<std::uint64_t>(beta_index) * 1000ULL +
                             static_cast<std::uint64_t>(trial);
  return mix64(base_seed ^ cell);
}

TrialResult run_trial(const NetworkConfig& cfg, OrderPolicy order) {
  const auto t0 = std::chrono::steady_clock::now();

  TrialResult t;
  t.n = cfg.n;
  t.beta = cfg.beta;
  t.derived_seed = cfg.seed;
  t.delta_bound = latency_upper_bound(cfg);
  t.delta_orderwise = orderwise_bound(cfg);
  t.rate_bound_valid = symmetric_rate_bound(1, cfg).valid;

  const std::vector<Point> pos = place_nodes(cfg);
  const double d_comm = comm_threshold(cfg);
  const double d_conf = conf_threshold(cfg);

  const CommGraph comm = build_comm_graph(pos, d_comm);
  t.num_edges = comm.num_edges();
  t.connected = is_connected(comm);
  t.clique_est_comm = clique_lower_bound(pos, d_comm);

  if (comm.edges.empty()) {
    // No links, nothing to exchange: delta stays 0 by convention.
    t.tin_all_satisfied = true;
    t.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return t;
  }

  ConflictAdjacency adjacency(comm, pos, d_conf);
  Schedule schedule =
      orient_edges(greedy_color(adjacency, comm, order), cfg.exchange_mode);
  t.num_colors = schedule.num_colors();
  t.max_conflict_degree = schedule.max_conflict_degree;

  const LatencyResult lat = latency(schedule, pos, cfg);
  t.delta_exact = lat.delta_exact;
  t.delta_rate_bound = lat.delta_rate_bound;
  t.rate_bound_valid = lat.rate_bound_valid;

  t.tin_all_satisfied = true;
  for (const auto& set : schedule.sets) {
    if (!tin_condition_check(set, pos, cfg).satisfied) {
      t.tin_all_satisfied = false;
      break;
    }
  }

  t.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return t;
}

namespace {

struct Task {
  int n = 0;
  double beta = 0.0;
  int beta_index = 0;
  int trial = 0;
  bool bound_only = false;
};

TrialResult bound_only_row(const NetworkConfig& cfg, std::uint64_t seed) {
  TrialResult t;
  t.n = cfg.n;
  t.beta = cfg.beta;
  t.derived_seed = seed;
  t.delta_bound = latency_upper_bound(cfg);
  t.delta_orderwise = orderwise_bound(cfg);
  t.rate_bound_valid = symmetric_rate_bound(1, cfg).valid;
  return t;
}

CellSummary summarize_cell(const NetworkConfig& cfg,
                           std::span<const TrialResult> rows, bool bound_only) {
  CellSummary c;
  c.n = cfg.n;
  c.beta = cfg.beta;
  c.delta_bound = latency_upper_bound(cfg);
  c.delta_orderwise = orderwise_bound(cfg);
  c.connectivity_marginal = connectivity_warning(cfg);
  if (bound_only || rows.empty()) return c;

  c.trials_done = static_cast<int>(rows.size());
  c.min_delta_exact = std::numeric_limits<double>::infinity();
  c.max_delta_exact = -std::numeric_limits<double>::infinity();
  for (const TrialResult& r : rows) {
    c.mean_delta_exact += r.delta_exact;
    c.min_delta_exact = std::min(c.min_delta_exact, r.delta_exact);
    c.max_delta_exact = std::max(c.max_delta_exact, r.delta_exact);
    c.mean_delta_rate_bound += r.delta_rate_bound;
    c.mean_num_edges += static_cast<double>(r.num_edges);
    c.mean_num_colors += static_cast<double>(r.num_colors);
    c.connected_count += r.connected ? 1 : 0;
    c.tin_count += r.tin_all_satisfied ? 1 : 0;
  }
  const double k = static_cast<double>(rows.size());
  c.mean_delta_exact /= k;
  c.mean_delta_rate_bound /= k;
  c.mean_num_edges /= k;
  c.mean_num_colors /= k;
  return c;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& sweep) {
  sweep.validate();

  std::vector<Task> tasks;
  for (std::size_t ni = 0; ni < sweep.n_values.size(); ++ni) {
    for (std::size_t bi = 0; bi < sweep.beta_values.size(); ++bi) {
      const int n = sweep.n_values[ni];
      const bool cell_bound_only = sweep.bound_only || n > sweep.empirical_n_cap;
      const int cell_trials = cell_bound_only ? 1 : sweep.trials;
      for (int t = 0; t < cell_trials; ++t)
        tasks.push_back({n, sweep.beta_values[bi], static_cast<int>(bi), t,
                         cell_bound_only});
    }
  }

  std::vector<std::optional<TrialResult>> slots(tasks.size());
  std::vector<std::string> errors(tasks.size());

  auto run_task = [&](std::size_t idx) {
    const Task& task = tasks[idx];
    NetworkConfig cfg = sweep.base;
    cfg.n = task.n;
    cfg.beta = task.beta;
    cfg.seed = derive_seed(sweep.base.seed, task.n, task.beta_index, task.trial);
    try {
      if (task.bound_only) {
        slots[idx] = bound_only_row(cfg, cfg.seed);
      } else {
        TrialResult r = run_trial(cfg, sweep.order);
        r.trial_index = task.trial;
        slots[idx] = r;
      }
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "cell n=" << task.n << " beta=" << format_g9(task.beta)
          << " trial=" << task.trial << ": " << e.what();
      errors[idx] = msg.str();
    }
  };

  if (sweep.threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers =
        std::min<int>(sweep.threads, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1))
          run_task(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  SweepReport report;
  report.bound_only = sweep.bound_only;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i]) report.rows.push_back(*slots[i]);
    if (!errors[i].empty()) report.notes.push_back(errors[i]);
    if (!sweep.bound_only && tasks[i].bound_only && tasks[i].trial == 0) {
      std::ostringstream msg;
      msg << "cell n=" << tasks[i].n << " beta=" << format_g9(tasks[i].beta)
          << ": empirical run skipped (n above cap "
          << sweep.empirical_n_cap << "), bound-only row emitted";
      report.notes.push_back(msg.str());
    }
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const TrialResult& a, const TrialResult& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.beta != b.beta) return a.beta < b.beta;
              return a.trial_index < b.trial_index;
            });

  for (int n : sweep.n_values) {
    for (double beta : sweep.beta_values) {
      NetworkConfig cfg = sweep.base;
      cfg.n = n;
      cfg.beta = beta;
      const auto lo = std::find_if(
          report.rows.begin(), report.rows.end(), [&](const TrialResult& r) {
            return r.n == n && r.beta == beta;
          });
      const auto hi = std::find_if(
          lo, report.rows.end(), [&](const TrialResult& r) {
            return r.n != n || r.beta != beta;
          });
      const bool cell_bound_only = sweep.bound_only || n > sweep.empirical_n_cap;
      report.cells.push_back(summarize_cell(
          cfg,
          std::span<const TrialResult>(report.rows.data() + (lo - report.rows.begin()),
                                       static_cast<std::size_t>(hi - lo)),
          cell_bound_only));
    }
  }
  std::sort(report.cells.begin(), report.cells.end(),
            [](const CellSummary& a, const CellSummary& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.beta < b.beta;
            });
  return report;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

bool parse_bool(const std::string& text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw std::invalid_argument("expected a boolean, got: " + text);
}

}  // namespace

void apply_config_text(const std::string& text, SweepConfig& sweep) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "n") sweep.base.n = std::stoi(value);
    else if (key == "radius_m") sweep.base.radius_m = std::stod(value);
    else if (key == "beta") sweep.base.beta = std::stod(value);
    else if (key == "alpha") sweep.base.alpha = std::stod(value);
    else if (key == "power_dbm") sweep.base.power_dbm = std::stod(value);
    else if (key == "noise_psd_dbm_hz") sweep.base.noise_psd_dbm_hz = std::stod(value);
    else if (key == "bandwidth_hz") sweep.base.bandwidth_hz = std::stod(value);
    else if (key == "ref_gain") sweep.base.ref_gain = std::stod(value);
    else if (key == "seed") sweep.base.seed = std::stoull(value);
    else if (key == "exchange_mode") sweep.base.exchange_mode = parse_exchange_mode(value);
    else if (key == "n_values") sweep.n_values = parse_int_list(value);
    else if (key == "beta_values") sweep.beta_values = parse_double_list(value);
    else if (key == "trials") sweep.trials = std::stoi(value);
    else if (key == "bound_only") sweep.bound_only = parse_bool(value);
    else if (key == "order") sweep.order = parse_order_policy(value);
    else if (key == "empirical_n_cap") sweep.empirical_n_cap = std::stoi(value);
    else if (key == "threads") sweep.threads = std::stoi(value);
    else if (key == "out") sweep.out_path = value;
    else if (key == "format") sweep.format = value;
    else if (key == "emit_plot") sweep.plot_path = value;
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }
}

SweepConfig load_sweep_config(const std::string& path, SweepConfig defaults) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), defaults);
  return defaults;
}

}  // namespace gexlat
