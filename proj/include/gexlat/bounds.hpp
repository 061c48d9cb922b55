#pragma once

#include "gexlat/config.hpp"

namespace gexlat {

// Closed-form quantities evaluated for one config. delta_bound is exactly
// jensen_latency_bound(chi_bound) by construction.
struct BoundReport {
  double chi_bound = 0.0;
  double delta_bound = 0.0;
  double delta_orderwise = 0.0;
  double expected_edges = 0.0;
  double clique_asymptote_comm = 0.0;  // at radius 2 * comm_threshold
  double clique_asymptote_conf = 0.0;  // at radius 2 * conf_threshold
};

// Conflict-graph chromatic number bound: 1 + (2*gamma^(1/alpha)/R) * n^(2-3*beta).
double chromatic_upper_bound(const NetworkConfig& cfg);

// SNR guaranteed on every comm link: gamma * comm_threshold^-alpha.
double snr_floor(const NetworkConfig& cfg);

// Coefficient inside the Jensen step: 2*sqrt(gamma)*R^(-alpha/2)*n^(alpha*beta/2+2*beta-2).
double jensen_coefficient(const NetworkConfig& cfg);

// chi / log2(1 + C*chi) with C = jensen_coefficient(cfg); increasing in chi,
// so any chromatic upper bound slots straight in.
double jensen_latency_bound(double chi, const NetworkConfig& cfg);

// The headline closed form: jensen_latency_bound(chromatic_upper_bound(cfg)).
double latency_upper_bound(const NetworkConfig& cfg);

// Pure scaling term n^(2-3*beta) / (beta * ln n); no hidden constant applied.
double orderwise_bound(const NetworkConfig& cfg);

// Asymptotic edge count of the comm graph: n^2 * (comm_threshold/R)^2 / 2.
// Boundary effects deflate finite instances by a few percent.
double expected_edge_count(const NetworkConfig& cfg);

// Limit clique number of a geometric graph at threshold r on a disk of
// radius big_r: n * r^2 / (4 * big_r^2).
double clique_asymptote(double n, double r, double big_r);

// Per-set slot cost 1/log2(1 + m/x); concave in x for x > 0.
double set_slot_cost(double x, double m);

// ln(1+y) - 2y/(2+y); nonnegative for y >= 0, which certifies both the slot
// cost concavity and the coloring latency monotonicity.
double shape_margin(double y);

// x / log2(1 + c*x); strictly increasing in x for c > 0.
double coloring_latency(double x, double c);

// Evaluates every closed form. Refuses configs outside the clique-asymptote
// regime (ln n / (n r^2) must be < 1 at both doubled thresholds) instead of
// extrapolating.
BoundReport evaluate_bounds(const NetworkConfig& cfg);

}  // namespace gexlat
