#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gexlat/channel.hpp"
#include "gexlat/config.hpp"
#include "gexlat/geometry.hpp"

namespace gexlat {

// One comm edge activated inside a slot, with its transmit direction.
struct ScheduledLink {
  int edge = 0;  // index into CommGraph.edges
  int tx = 0;
  int rx = 0;
};

// Proper coloring of the conflict graph: sets[k] holds the links activated
// together in slot k. Directions are canonical low->high until orient_edges
// says otherwise; per-direction exchanges keep the canonical direction and
// double up inside latency().
struct Schedule {
  std::vector<int> color_of;                    // conflict vertex -> color
  std::vector<std::vector<ScheduledLink>> sets; // per color, ascending edge id
  int max_conflict_degree = 0;
  ExchangeMode mode = ExchangeMode::kPerEdge;

  int num_colors() const { return static_cast<int>(sets.size()); }
};

// Smallest-available-color greedy sweep. kDegreeDescending sorts vertices by
// conflict degree (ties by index) before coloring; the resulting color count
// never exceeds 1 + max conflict degree either way.
Schedule greedy_color(const ConflictGraph& conf, const CommGraph& comm,
                      OrderPolicy policy = OrderPolicy::kDegreeDescending);
Schedule greedy_color(ConflictAdjacency& conf, const CommGraph& comm,
                      OrderPolicy policy = OrderPolicy::kDegreeDescending);

// Stamps the exchange mode and (re)normalizes directions to low->high.
Schedule orient_edges(Schedule schedule, ExchangeMode mode);

// Minimum exact rate across the set when all its links transmit together;
// min is what every link can sustain for the whole slot. Empty set rejected.
double symmetric_rate_exact(std::span<const ScheduledLink> set,
                            std::span<const Point> pos,
                            const NetworkConfig& cfg);

struct RateBound {
  double rate = 0.0;  // log2(1 + sqrt(gamma * d_comm^-alpha) / set_size)
  bool valid = false; // gamma * d_conf^-alpha >= 1, the finite-n guard under
                      // which the closed form provably lower-bounds the rate
};

RateBound symmetric_rate_bound(std::int64_t set_size, const NetworkConfig& cfg);

struct TinReport {
  double min_snr = 0.0;
  double max_inr = 0.0;
  bool satisfied = false;  // max_inr <= sqrt(min_snr)
};

// Audits the treating-interference-as-noise optimality condition over one
// activation set (pairwise INRs against the weakest direct link).
TinReport tin_condition_check(std::span<const ScheduledLink> set,
                              std::span<const Point> pos,
                              const NetworkConfig& cfg);

struct SetRate {
  int size = 0;
  double rate_exact = 0.0;    // forward direction
  double rate_reverse = 0.0;  // == rate_exact in per-edge mode
  double rate_bound = 0.0;
  bool bound_valid = false;
};

struct LatencyResult {
  double delta_exact = 0.0;       // channel uses per bit, exact per-set rates
  double delta_rate_bound = 0.0;  // same sum through the closed-form bound
  bool rate_bound_valid = false;  // every set had the finite-n guard
  double seconds_per_bit = 0.0;   // delta_exact / bandwidth
  std::vector<SetRate> per_set;
};

// Time-shared total: sum over slots of 1/rate (both directions in
// per-direction mode). Audits half-duplex inside every set.
LatencyResult latency(const Schedule& schedule, std::span<const Point> pos,
                      const NetworkConfig& cfg);

// {"colors": [[edge ids]], "directions": [[[src,dst],...]]}
std::string serialize_schedule(const Schedule& schedule);

}  // namespace gexlat
