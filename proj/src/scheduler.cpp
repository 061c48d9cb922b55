#include "gexlat/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace gexlat {

namespace {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Smallest-available-color sweep, generic over how neighbors are enumerated.
template <class ForEachNeighbor>
Schedule color_impl(int m, const std::vector<int>& degrees,
                    const CommGraph& comm, OrderPolicy policy,
                    ForEachNeighbor&& for_each_neighbor) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  if (policy == OrderPolicy::kDegreeDescending) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
      return a < b;
    });
  }

  Schedule s;
  s.color_of.assign(static_cast<std::size_t>(m), -1);
  s.max_conflict_degree =
      degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());

  // forbidden[c] == v marks color c as used by a neighbor of v.
  std::vector<int> forbidden(static_cast<std::size_t>(m) + 1, -1);
  int num_colors = 0;
  for (int v : order) {
    for_each_neighbor(v, [&](int u) {
      if (s.color_of[u] >= 0) forbidden[s.color_of[u]] = v;
    });
    int c = 0;
    while (c < num_colors && forbidden[c] == v) ++c;
    s.color_of[v] = c;
    num_colors = std::max(num_colors, c + 1);
  }

  s.sets.resize(static_cast<std::size_t>(num_colors));
  for (int e = 0; e < m; ++e) {
    const auto [i, j] = comm.edges[e];
    s.sets[s.color_of[e]].push_back({e, i, j});
  }
  return s;
}

std::vector<ScheduledLink> reversed(std::span<const ScheduledLink> set) {
  std::vector<ScheduledLink> rev(set.begin(), set.end());
  for (ScheduledLink& l : rev) std::swap(l.tx, l.rx);
  return rev;
}

ActiveSet to_active_set(std::span<const ScheduledLink> set) {
  ActiveSet act;
  act.links.reserve(set.size());
  for (const ScheduledLink& l : set) act.links.push_back({l.tx, l.rx});
  return act;
}

}  // namespace

Schedule greedy_color(const ConflictGraph& conf, const CommGraph& comm,
                      OrderPolicy policy) {
  const int m = conf.num_vertices;
  std::vector<int> degrees(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e)
    degrees[e] = static_cast<int>(conf.neighbors(e).size());
  return color_impl(m, degrees, comm, policy, [&](int v, auto&& fn) {
    for (int u : conf.neighbors(v)) fn(u);
  });
}

Schedule greedy_color(ConflictAdjacency& conf, const CommGraph& comm,
                      OrderPolicy policy) {
  const int m = conf.num_vertices();
  std::vector<int> degrees(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) degrees[e] = conf.degree(e);
  return color_impl(m, degrees, comm, policy, [&](int v, auto&& fn) {
    conf.for_each_neighbor(v, fn);
  });
}

Schedule orient_edges(Schedule schedule, ExchangeMode mode) {
  schedule.mode = mode;
  for (auto& set : schedule.sets)
    for (ScheduledLink& l : set)
      if (l.tx > l.rx) std::swap(l.tx, l.rx);
  return schedule;
}

double symmetric_rate_exact(std::span<const ScheduledLink> set,
                            std::span<const Point> pos,
                            const NetworkConfig& cfg) {
  if (set.empty()) throw std::invalid_argument("empty activation set");
  const ActiveSet act = to_active_set(set);
  double min_rate = std::numeric_limits<double>::infinity();
  for (const ScheduledLink& l : set)
    min_rate = std::min(min_rate, link_rate(sinr(l.tx, l.rx, act, pos, cfg)));
  return min_rate;
}

RateBound symmetric_rate_bound(std::int64_t set_size,
                               const NetworkConfig& cfg) {
  if (set_size < 1) throw std::invalid_argument("set size must be >= 1");
  const double gamma = snr_ref(cfg);
  const double m = std::sqrt(gamma * std::pow(comm_threshold(cfg), -cfg.alpha));
  const double inr_cap = gamma * std::pow(conf_threshold(cfg), -cfg.alpha);
  RateBound rb;
  rb.rate = std::log1p(m / static_cast<double>(set_size)) / std::numbers::ln2;
  rb.valid = inr_cap >= 1.0;
  return rb;
}

TinReport tin_condition_check(std::span<const ScheduledLink> set,
                              std::span<const Point> pos,
                              const NetworkConfig& cfg) {
  const double gamma = snr_ref(cfg);
  TinReport rep;
  rep.min_snr = std::numeric_limits<double>::infinity();
  rep.max_inr = 0.0;
  for (const ScheduledLink& l : set) {
    const double d = distance(pos[l.tx], pos[l.rx]);
    rep.min_snr = std::min(rep.min_snr, gamma * std::pow(d, -cfg.alpha));
  }
  for (const ScheduledLink& a : set) {
    for (const ScheduledLink& b : set) {
      if (a.edge == b.edge) continue;
      const double d = distance(pos[a.tx], pos[b.rx]);
      rep.max_inr = std::max(rep.max_inr, gamma * std::pow(d, -cfg.alpha));
    }
  }
  rep.satisfied = rep.max_inr <= std::sqrt(rep.min_snr);
  return rep;
}

LatencyResult latency(const Schedule& schedule, std::span<const Point> pos,
                      const NetworkConfig& cfg) {
  LatencyResult result;
  result.rate_bound_valid = true;
  const bool both_ways = schedule.mode == ExchangeMode::kPerDirection;

  for (const auto& set : schedule.sets) {
    if (set.empty()) continue;
    if (!to_active_set(set).half_duplex_ok())
      throw std::runtime_error("half-duplex violation inside a slot");

    const double fwd = symmetric_rate_exact(set, pos, cfg);
    double rev = fwd;
    if (both_ways) rev = symmetric_rate_exact(reversed(set), pos, cfg);
    if (!(fwd > 0.0) || !(rev > 0.0))
      throw std::runtime_error("zero symmetric rate in a slot");

    const RateBound rb =
        symmetric_rate_bound(static_cast<std::int64_t>(set.size()), cfg);
    result.delta_exact += both_ways ? 1.0 / fwd + 1.0 / rev : 1.0 / fwd;
    result.delta_rate_bound += (both_ways ? 2.0 : 1.0) / rb.rate;
    result.rate_bound_valid = result.rate_bound_valid && rb.valid;
    result.per_set.push_back(
        {static_cast<int>(set.size()), fwd, rev, rb.rate, rb.valid});
  }
  result.seconds_per_bit = result.delta_exact / cfg.bandwidth_hz;
  return result;
}

std::string serialize_schedule(const Schedule& schedule) {
  nlohmann::ordered_json doc;
  auto& colors = doc["colors"] = nlohmann::ordered_json::array();
  auto& directions = doc["directions"] = nlohmann::ordered_json::array();
  for (const auto& set : schedule.sets) {
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    nlohmann::ordered_json dirs = nlohmann::ordered_json::array();
    for (const ScheduledLink& l : set) {
      ids.push_back(l.edge);
      dirs.push_back({l.tx, l.rx});
    }
    colors.push_back(std::move(ids));
    directions.push_back(std::move(dirs));
  }
  return doc.dump();
}

}  // namespace gexlat
