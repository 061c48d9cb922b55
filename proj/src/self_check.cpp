#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#include "gexlat/bounds.hpp"
#include "gexlat/channel.hpp"
#include "gexlat/emit.hpp"
#include "gexlat/geometry.hpp"
#include "gexlat/harness.hpp"
#include "gexlat/scheduler.hpp"

namespace gexlat {

namespace {

double dist(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<std::pair<int, int>> all_pairs_edges(std::span<const Point> pos,
                                                 double d) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(pos.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pos.size()); ++j)
      if (dist(pos[i], pos[j]) <= d) edges.emplace_back(i, j);
  return edges;
}

bool edges_conflict(const std::pair<int, int>& a, const std::pair<int, int>& b,
                    std::span<const Point> pos, double d_conf) {
  const double m =
      std::min(std::min(dist(pos[a.first], pos[b.first]),
                        dist(pos[a.first], pos[b.second])),
               std::min(dist(pos[a.second], pos[b.first]),
                        dist(pos[a.second], pos[b.second])));
  return m <= d_conf;
}

NetworkConfig random_instance(std::mt19937_64& gen) {
  NetworkConfig cfg;
  cfg.n = 10 + static_cast<int>(gen() % 240);
  cfg.beta = 0.15 + 0.3 * static_cast<double>(gen() % 1000) / 1000.0;
  cfg.power_dbm = (gen() % 2 == 0) ? 30.0 : 0.0;
  cfg.seed = gen();
  return cfg;
}

}  // namespace

bool run_self_checks(std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 gen(seed);
  bool all_ok = true;
  auto report = [&](const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };

  {  // comm graph grid vs all-pairs definition
    bool ok = true;
    for (int k = 0; k < 10 && ok; ++k) {
      NetworkConfig cfg = random_instance(gen);
      const auto pos = place_nodes(cfg);
      const double d = comm_threshold(cfg);
      ok = build_comm_graph(pos, d).edges == all_pairs_edges(pos, d);
    }
    report("comm graph matches all-pairs rule", ok);
  }

  {  // conflict graph vs pairwise min-of-four
    bool ok = true;
    for (int k = 0; k < 8 && ok; ++k) {
      NetworkConfig cfg = random_instance(gen);
      cfg.n = 10 + static_cast<int>(gen() % 60);
      const auto pos = place_nodes(cfg);
      const auto comm = build_comm_graph(pos, comm_threshold(cfg));
      if (comm.num_edges() > 200) continue;
      const double d_conf = conf_threshold(cfg);
      const auto conf = build_conflict_graph(comm, pos, d_conf);
      for (int a = 0; a < conf.num_vertices && ok; ++a) {
        for (int b = a + 1; b < conf.num_vertices && ok; ++b) {
          const bool expect =
              edges_conflict(comm.edges[a], comm.edges[b], pos, d_conf);
          const auto nb = conf.neighbors(a);
          const bool got = std::binary_search(nb.begin(), nb.end(), b);
          ok = expect == got;
        }
      }
    }
    report("conflict graph matches min-of-four rule", ok);
  }

  {  // two connectivity routes agree
    bool ok = true;
    for (int k = 0; k < 20 && ok; ++k) {
      NetworkConfig cfg = random_instance(gen);
      cfg.beta = 0.2 + 0.29 * static_cast<double>(gen() % 1000) / 1000.0;
      const auto pos = place_nodes(cfg);
      const auto comm = build_comm_graph(pos, comm_threshold(cfg));
      ok = is_connected(comm) == is_connected_union_find(comm);
    }
    report("BFS and union-find connectivity agree", ok);
  }

  {  // coloring audits: proper, 1 + max degree, half-duplex, TIN, rate bound
    bool proper_ok = true, greedy_ok = true, duplex_ok = true, tin_ok = true,
         bound_ok = true;
    for (int k = 0; k < 8; ++k) {
      NetworkConfig cfg = random_instance(gen);
      cfg.n = 10 + static_cast<int>(gen() % 120);
      const auto pos = place_nodes(cfg);
      const auto comm = build_comm_graph(pos, comm_threshold(cfg));
      if (comm.edges.empty()) continue;
      const double d_conf = conf_threshold(cfg);
      ConflictAdjacency adj(comm, pos, d_conf);
      for (OrderPolicy policy :
           {OrderPolicy::kDegreeDescending, OrderPolicy::kInputOrder}) {
        const Schedule sched = greedy_color(adj, comm, policy);
        greedy_ok = greedy_ok &&
                    sched.num_colors() <= 1 + sched.max_conflict_degree;
        for (const auto& set : sched.sets) {
          ActiveSet act;
          for (const auto& l : set) act.links.push_back({l.tx, l.rx});
          duplex_ok = duplex_ok && act.half_duplex_ok();
          for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
              proper_ok = proper_ok &&
                          !edges_conflict(comm.edges[set[a].edge],
                                          comm.edges[set[b].edge], pos, d_conf);
          tin_ok = tin_ok && tin_condition_check(set, pos, cfg).satisfied;
        }
        const LatencyResult lat = latency(sched, pos, cfg);
        if (lat.rate_bound_valid)
          bound_ok = bound_ok &&
                     lat.delta_exact <= lat.delta_rate_bound * (1.0 + 1e-12);
      }
    }
    report("every color class is conflict-free", proper_ok);
    report("colors <= 1 + max conflict degree", greedy_ok);
    report("half-duplex holds inside every slot", duplex_ok);
    report("TIN condition holds on every slot", tin_ok);
    report("exact latency within closed-form rate bound", bound_ok);
  }

  {  // determinism and parallel-equals-serial
    SweepConfig sweep;
    sweep.base.seed = gen();
    sweep.base.power_dbm = 0.0;
    sweep.n_values = {60, 120};
    sweep.beta_values = {0.2, 0.4};
    sweep.trials = 2;
    const std::string once = to_csv(run_sweep(sweep));
    const std::string twice = to_csv(run_sweep(sweep));
    report("repeated sweep is byte-identical", once == twice);
    sweep.threads = 4;
    const std::string parallel = to_csv(run_sweep(sweep));
    report("parallel sweep equals serial sweep", once == parallel);
  }

  return all_ok;
}

}  // namespace gexlat
