#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gexlat/bounds.hpp"
#include "gexlat/channel.hpp"
#include "gexlat/geometry.hpp"
#include "oracles.hpp"

using namespace gexlat;

namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> xs;
  const double step = (std::log10(hi) - std::log10(lo)) / (points - 1);
  for (int i = 0; i < points; ++i)
    xs.push_back(std::pow(10.0, std::log10(lo) + i * step));
  return xs;
}

}  // namespace

TEST_CASE("chromatic upper bound") {
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 1);
  CHECK(chromatic_upper_bound(cfg) == doctest::Approx(6.3247e4).epsilon(5e-3));

  // exponent 2-3*beta hits zero at beta = 2/3: formula sanity point only
  NetworkConfig flat = cfg;
  flat.beta = 2.0 / 3.0;
  const double gamma = snr_ref(flat);
  CHECK(chromatic_upper_bound(flat) ==
        doctest::Approx(1.0 + 2.0 * std::sqrt(gamma) / flat.radius_m)
            .epsilon(1e-9));

  // the variable term is linear in 1/R
  NetworkConfig doubled = cfg;
  doubled.radius_m *= 2.0;
  CHECK(chromatic_upper_bound(doubled) - 1.0 ==
        doctest::Approx((chromatic_upper_bound(cfg) - 1.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("jensen latency bound") {
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 1);
  const double c = jensen_coefficient(cfg);
  CHECK(jensen_latency_bound(1.0, cfg) ==
        doctest::Approx(1.0 / std::log2(1.0 + c)).epsilon(1e-12));

  // monotone in chi
  double prev = 0.0;
  for (double chi = 1.0; chi < 1e8; chi *= 3.0) {
    const double v = jensen_latency_bound(chi, cfg);
    CHECK(v > prev);
    prev = v;
  }

  CHECK(jensen_latency_bound(chromatic_upper_bound(cfg), cfg) ==
        doctest::Approx(6341.088).epsilon(1e-4));
  CHECK_THROWS_AS(jensen_latency_bound(0.5, cfg), std::invalid_argument);
}

TEST_CASE("headline bound is the composed closed form") {
  std::mt19937_64 gen(13);
  for (int k = 0; k < 25; ++k) {
    NetworkConfig cfg = oracles::reference_config(
        2 + static_cast<int>(gen() % 100000),
        0.05 + 0.44 * static_cast<double>(gen() % 1000) / 1000.0, 1);
    cfg.alpha = 2.0 + static_cast<double>(gen() % 200) / 100.0;
    const double composed = jensen_latency_bound(chromatic_upper_bound(cfg), cfg);
    CHECK(latency_upper_bound(cfg) == composed);
    // structural identity against the generic x/log2(1+cx) helper
    CHECK(latency_upper_bound(cfg) ==
          doctest::Approx(coloring_latency(chromatic_upper_bound(cfg),
                                           jensen_coefficient(cfg)))
              .epsilon(1e-12));
  }
  NetworkConfig fig = oracles::reference_config(1000, 0.3, 1);
  CHECK(latency_upper_bound(fig) == doctest::Approx(6341.088).epsilon(1e-4));
}

TEST_CASE("headline bound is monotone over the printed grid") {
  for (int pct = 10; pct <= 45; pct += 5) {
    double prev = 0.0;
    for (int n = 1000; n <= 2000; n += 100) {
      const double v = latency_upper_bound(
          oracles::reference_config(n, pct / 100.0, 1));
      CHECK(v > prev);
      prev = v;
    }
  }
  for (int n = 1000; n <= 2000; n += 100) {
    double prev = std::numeric_limits<double>::infinity();
    for (int pct = 10; pct <= 45; pct += 5) {
      const double v = latency_upper_bound(
          oracles::reference_config(n, pct / 100.0, 1));
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("orderwise scaling term") {
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 1);
  CHECK(orderwise_bound(cfg) == doctest::Approx(962.81).epsilon(1e-4));

  // the closed form stays within a fixed factor of the scaling term
  double lo = 1e300, hi = 0.0;
  for (int n = 1000; n <= 100000; n *= 2) {
    NetworkConfig c = oracles::reference_config(n, 0.3, 1);
    const double ratio = latency_upper_bound(c) / orderwise_bound(c);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo >= 1e-2);
  CHECK(hi <= 1e2);

  // power-law growth: orderwise(2n)/orderwise(n) -> 2^(2-3*beta); the exact
  // identity carries the slowly vanishing ln(n)/ln(2n) factor
  double prev_gap = 1e300;
  for (int p = 12; p <= 30; p += 6) {
    NetworkConfig half = oracles::reference_config(1 << (p - 1), 0.3, 1);
    NetworkConfig full = half;
    full.n = 1 << p;
    const double growth = orderwise_bound(full) / orderwise_bound(half);
    const double log_factor = std::log(static_cast<double>(half.n)) /
                              std::log(static_cast<double>(full.n));
    CHECK(growth ==
          doctest::Approx(std::pow(2.0, 1.1) * log_factor).epsilon(1e-12));
    const double gap = std::abs(growth - std::pow(2.0, 1.1));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("expected edge count") {
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 1);
  CHECK(expected_edge_count(cfg) == doctest::Approx(7924.466).epsilon(1e-5));
  // algebraic identity (n/2) * n^(1-2*beta)
  CHECK(expected_edge_count(cfg) ==
        doctest::Approx(500.0 * std::pow(1000.0, 0.4)).epsilon(1e-12));

  // dense limit: threshold == R means all pairs, asymptotically n^2/2
  NetworkConfig dense = cfg;
  dense.beta = 1e-9;
  CHECK(expected_edge_count(dense) ==
        doctest::Approx(1000.0 * 1000.0 / 2.0).epsilon(1e-6));
}

TEST_CASE("clique asymptote") {
  const double r = 100.0 * std::pow(4000.0, -0.3);
  CHECK(clique_asymptote(4000, r, 100.0) == doctest::Approx(6.8986).epsilon(1e-4));
  CHECK(clique_asymptote(4000, 200.0, 100.0) == doctest::Approx(4000.0).epsilon(1e-12));
  CHECK(clique_asymptote(500, 2.0 * r, 100.0) ==
        doctest::Approx(4.0 * clique_asymptote(500, r, 100.0)).epsilon(1e-12));
}

TEST_CASE("empirical edge count approaches the asymptote") {
  // light version of the edge-count law at n=1000
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 0);
  double mean = 0.0;
  const int trials = 8;
  for (int t = 0; t < trials; ++t) {
    cfg.seed = 9000 + t;
    const auto pos = place_nodes(cfg);
    mean += static_cast<double>(build_comm_graph(pos, comm_threshold(cfg)).num_edges());
  }
  mean /= trials;
  CHECK(std::abs(mean - expected_edge_count(cfg)) / expected_edge_count(cfg) < 0.12);
}

TEST_CASE("slot cost helper") {
  CHECK(set_slot_cost(125.9, 125.9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(set_slot_cost(1.0, 125.8925) == doctest::Approx(0.143113).epsilon(1e-5));

  // concavity: second central differences stay below +1e-9
  for (double m : {1.0, 1e2, 1e4}) {
    for (double x : log_grid(1e-2, 1e4, 200)) {
      const double h = 0.05 * x;
      const double d2 = set_slot_cost(x + h, m) - 2.0 * set_slot_cost(x, m) +
                        set_slot_cost(x - h, m);
      CHECK(d2 <= 1e-9);
    }
  }
}

TEST_CASE("shape margin is nonnegative with the stated derivative") {
  CHECK(shape_margin(0.0) == 0.0);
  CHECK(shape_margin(1.0) == doctest::Approx(std::log(2.0) - 2.0 / 3.0).epsilon(1e-12));
  for (double y : log_grid(1e-6, 1e6, 10000)) CHECK(shape_margin(y) >= 0.0);

  // derivative y^2 / ((1+y)(2+y)^2) against central differences
  for (double y : log_grid(1e-3, 1e6, 400)) {
    const double eps = 1e-5 * std::max(1.0, y);
    const double fd = (shape_margin(y + eps) - shape_margin(y - eps)) / (2.0 * eps);
    const double closed = y * y / ((1.0 + y) * (2.0 + y) * (2.0 + y));
    CHECK(fd == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("coloring latency helper is strictly increasing") {
  CHECK(coloring_latency(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(coloring_latency(3.0, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
  for (double c : {1e-4, 1.0, 1e4}) {
    double prev = 0.0;
    for (double x : log_grid(1e-2, 1e6, 300)) {
      const double v = coloring_latency(x, c);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("mean slot cost never exceeds the cost of the mean size") {
  // concavity corollary over random integer partitions
  std::mt19937_64 gen(321);
  const double m = 125.8925;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(gen() % 40);
    std::vector<double> sizes;
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      sizes.push_back(1.0 + static_cast<double>(gen() % 50));
      total += sizes.back();
    }
    double mean_cost = 0.0;
    for (double s : sizes) mean_cost += set_slot_cost(s, m);
    mean_cost /= k;
    CHECK(mean_cost <= set_slot_cost(total / k, m) * (1.0 + 1e-12));
  }
}

TEST_CASE("bound report composition and regime refusal") {
  NetworkConfig cfg = oracles::reference_config(1000, 0.3, 1);
  const BoundReport rep = evaluate_bounds(cfg);
  CHECK(rep.chi_bound == chromatic_upper_bound(cfg));
  CHECK(rep.delta_bound == jensen_latency_bound(rep.chi_bound, cfg));
  CHECK(rep.delta_orderwise == orderwise_bound(cfg));
  CHECK(rep.expected_edges == expected_edge_count(cfg));
  CHECK(rep.clique_asymptote_comm ==
        clique_asymptote(cfg.n, 2.0 * comm_threshold(cfg), cfg.radius_m));
  CHECK(rep.clique_asymptote_conf ==
        clique_asymptote(cfg.n, 2.0 * conf_threshold(cfg), cfg.radius_m));
  CHECK(rep.chi_bound > 0.0);
  CHECK(rep.delta_bound > 0.0);
  CHECK(std::isfinite(rep.delta_bound));

  // a centimeter-scale disk pushes ln(n)/(n r^2) over 1 at the comm radius
  NetworkConfig tiny = cfg;
  tiny.radius_m = 0.01;
  tiny.power_dbm = -90.0;
  CHECK_THROWS_AS(evaluate_bounds(tiny), std::invalid_argument);
}
