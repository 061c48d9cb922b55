#include "gexlat/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gexlat {

namespace {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double noise_power(const NetworkConfig& cfg) {
  return dbm_to_watts(cfg.noise_psd_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz));
}

double snr_ref(const NetworkConfig& cfg) {
  return dbm_to_watts(cfg.power_dbm) * cfg.ref_gain / noise_power(cfg);
}

LinkBudget link_budget(const NetworkConfig& cfg) {
  LinkBudget lb;
  lb.power_watts = dbm_to_watts(cfg.power_dbm);
  lb.noise_watts = noise_power(cfg);
  lb.gamma = lb.power_watts * cfg.ref_gain / lb.noise_watts;
  return lb;
}

double channel_gain(double d, const NetworkConfig& cfg) {
  if (!(d > 0.0)) throw std::invalid_argument("path loss undefined for d <= 0");
  return cfg.ref_gain * std::pow(d, -cfg.alpha);
}

bool ActiveSet::half_duplex_ok() const {
  std::vector<int> nodes;
  nodes.reserve(2 * links.size());
  for (const DirectedLink& l : links) {
    nodes.push_back(l.tx);
    nodes.push_back(l.rx);
  }
  std::sort(nodes.begin(), nodes.end());
  return std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end();
}

double sinr(int tx, int rx, const ActiveSet& active, std::span<const Point> pos,
            const NetworkConfig& cfg) {
  const bool member = std::any_of(
      active.links.begin(), active.links.end(),
      [&](const DirectedLink& l) { return l.tx == tx && l.rx == rx; });
  if (!member) throw std::invalid_argument("link is not in the active set");

  const double gamma = snr_ref(cfg);
  const double d = distance(pos[tx], pos[rx]);
  if (!(d > 0.0)) throw std::invalid_argument("coincident nodes");
  const double signal = gamma * std::pow(d, -cfg.alpha);

  double interference = 0.0;
  for (const DirectedLink& l : active.links) {
    if (l.tx == tx || l.tx == rx) continue;
    const double dk = distance(pos[l.tx], pos[rx]);
    if (!(dk > 0.0)) throw std::invalid_argument("coincident nodes");
    interference += gamma * std::pow(dk, -cfg.alpha);
  }
  return signal / (1.0 + interference);
}

double link_rate(double sinr_value) {
  if (sinr_value < 0.0) throw std::invalid_argument("negative SINR");
  return std::log1p(sinr_value) / std::numbers::ln2;
}

}  // namespace gexlat
