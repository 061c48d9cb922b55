#include "gexlat/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gexlat/channel.hpp"
#include "gexlat/geometry.hpp"

namespace gexlat {

namespace {

// log2(1 + p) that survives p overflowing to inf: fall back to the summed
// logs of the factors.
double log2_1p_product(double a, double b) {
  const double p = a * b;
  if (std::isfinite(p)) return std::log1p(p) / std::numbers::ln2;
  return (std::log(a) + std::log(b)) / std::numbers::ln2;
}

}  // namespace

double chromatic_upper_bound(const NetworkConfig& cfg) {
  const double gamma = snr_ref(cfg);
  const double n = static_cast<double>(cfg.n);
  return 1.0 + 2.0 * std::pow(gamma, 1.0 / cfg.alpha) / cfg.radius_m *
                   std::pow(n, 2.0 - 3.0 * cfg.beta);
}

double snr_floor(const NetworkConfig& cfg) {
  return snr_ref(cfg) * std::pow(comm_threshold(cfg), -cfg.alpha);
}

double jensen_coefficient(const NetworkConfig& cfg) {
  const double gamma = snr_ref(cfg);
  const double n = static_cast<double>(cfg.n);
  return 2.0 * std::sqrt(gamma) * std::pow(cfg.radius_m, -cfg.alpha / 2.0) *
         std::pow(n, cfg.alpha * cfg.beta / 2.0 + 2.0 * cfg.beta - 2.0);
}

double jensen_latency_bound(double chi, const NetworkConfig& cfg) {
  if (!(chi >= 1.0)) throw std::invalid_argument("chi must be >= 1");
  return coloring_latency(chi, jensen_coefficient(cfg));
}

double latency_upper_bound(const NetworkConfig& cfg) {
  return jensen_latency_bound(chromatic_upper_bound(cfg), cfg);
}

double orderwise_bound(const NetworkConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("n must be >= 2");
  const double n = static_cast<double>(cfg.n);
  return std::pow(n, 2.0 - 3.0 * cfg.beta) / (cfg.beta * std::log(n));
}

double expected_edge_count(const NetworkConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  const double ratio = comm_threshold(cfg) / cfg.radius_m;
  return 0.5 * n * n * ratio * ratio;
}

double clique_asymptote(double n, double r, double big_r) {
  if (!(r > 0.0) || !(big_r > 0.0))
    throw std::invalid_argument("radii must be > 0");
  return n * r * r / (4.0 * big_r * big_r);
}

double set_slot_cost(double x, double m) {
  if (!(x > 0.0) || !(m > 0.0))
    throw std::invalid_argument("arguments must be > 0");
  return 1.0 / (std::log1p(m / x) / std::numbers::ln2);
}

double shape_margin(double y) {
  if (y < 0.0) throw std::invalid_argument("y must be >= 0");
  return std::log1p(y) - 2.0 * y / (2.0 + y);
}

double coloring_latency(double x, double c) {
  if (!(x > 0.0) || !(c > 0.0))
    throw std::invalid_argument("arguments must be > 0");
  return x / log2_1p_product(c, x);
}

BoundReport evaluate_bounds(const NetworkConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  const double d_comm = comm_threshold(cfg);
  const double d_conf = conf_threshold(cfg);

  // Clique-number limit needs ln(n)/(n r^2) -> 0; refuse configs where the
  // finite value is not even below 1 at the doubled thresholds.
  for (const double r : {2.0 * d_comm, 2.0 * d_conf}) {
    const double q = std::log(n) / (n * r * r);
    if (!(q < 1.0)) {
      std::ostringstream msg;
      msg << "clique asymptote out of regime: ln(n)/(n*r^2) = " << q
          << " at r = " << r << " m (must be < 1)";
      throw std::invalid_argument(msg.str());
    }
  }

  BoundReport rep;
  rep.chi_bound = chromatic_upper_bound(cfg);
  rep.delta_bound = jensen_latency_bound(rep.chi_bound, cfg);
  rep.delta_orderwise = orderwise_bound(cfg);
  rep.expected_edges = expected_edge_count(cfg);
  rep.clique_asymptote_comm = clique_asymptote(n, 2.0 * d_comm, cfg.radius_m);
  rep.clique_asymptote_conf = clique_asymptote(n, 2.0 * d_conf, cfg.radius_m);
  return rep;
}

}  // namespace gexlat
