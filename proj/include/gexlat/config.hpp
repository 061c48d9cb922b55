#pragma once

#include <cstdint>
#include <string>

namespace gexlat {

// How the per-iteration payload is counted: one bit per undirected edge
// (canonical low->high direction), or one bit in each direction with the
// slot time-split in two halves.
enum class ExchangeMode { kPerEdge, kPerDirection };

// Vertex order used by the greedy coloring.
enum class OrderPolicy { kInputOrder, kDegreeDescending };

// All physical and geometric parameters of one network instance.
// Distances are meters, powers dBm, bandwidth Hz; everything downstream
// works in linear SI units.
struct NetworkConfig {
  int n = 1000;                      // node count
  double radius_m = 100.0;           // deployment disk radius
  double beta = 0.3;                 // density exponent, in (0, 1/2)
  double alpha = 2.0;                // path-loss exponent, >= 2
  double power_dbm = 30.0;           // transmit power
  double noise_psd_dbm_hz = -174.0;  // noise power spectral density
  double bandwidth_hz = 10.0e6;      // channel bandwidth
  double ref_gain = 1.0e-7;          // channel gain at 1 m
  std::uint64_t seed = 1;            // RNG seed for node placement
  ExchangeMode exchange_mode = ExchangeMode::kPerEdge;

  // Throws std::invalid_argument on the first violated constraint.
  void validate() const;
};

ExchangeMode parse_exchange_mode(const std::string& name);
OrderPolicy parse_order_policy(const std::string& name);
const char* to_string(ExchangeMode mode);
const char* to_string(OrderPolicy policy);

}  // namespace gexlat
