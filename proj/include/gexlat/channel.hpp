#pragma once

#include <span>
#include <vector>

#include "gexlat/config.hpp"
#include "gexlat/geometry.hpp"

namespace gexlat {

// Transmit power, noise power and the 1 m reference SNR, all linear.
struct LinkBudget {
  double power_watts = 0.0;
  double noise_watts = 0.0;
  double gamma = 0.0;  // power * ref_gain / noise
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Integrated noise power: psd (dBm/Hz) over the configured bandwidth.
double noise_power(const NetworkConfig& cfg);

// Reference SNR at 1 m: P * G0 / N.
double snr_ref(const NetworkConfig& cfg);

LinkBudget link_budget(const NetworkConfig& cfg);

// Single-slope path loss G0 * d^-alpha. No near-field clamp: d < 1 m yields
// gain above G0, matching the pure power law. d <= 0 is rejected.
double channel_gain(double d, const NetworkConfig& cfg);

struct DirectedLink {
  int tx = 0;
  int rx = 0;
};

// The directed links transmitting in one slot. Valid sets are half-duplex on
// a single band: no node appears twice in any role.
struct ActiveSet {
  std::vector<DirectedLink> links;

  bool half_duplex_ok() const;
};

// SINR at rx for the (tx -> rx) link: every other active transmitter except
// tx and rx itself contributes interference, which is treated as noise.
// Rejects coincident node pairs (the path-loss model is undefined at d = 0).
double sinr(int tx, int rx, const ActiveSet& active, std::span<const Point> pos,
            const NetworkConfig& cfg);

// Spectral efficiency log2(1 + sinr), bits per channel use.
double link_rate(double sinr_value);

}  // namespace gexlat
