#include "gexlat/config.hpp"

#include <stdexcept>

namespace gexlat {

void NetworkConfig::validate() const {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(radius_m > 0.0)) throw std::invalid_argument("radius_m must be > 0");
  if (!(beta > 0.0 && beta < 0.5))
    throw std::invalid_argument("beta must lie in (0, 0.5) exclusive");
  if (!(alpha >= 2.0)) throw std::invalid_argument("alpha must be >= 2");
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("bandwidth_hz must be > 0");
  if (!(ref_gain > 0.0)) throw std::invalid_argument("ref_gain must be > 0");
}

ExchangeMode parse_exchange_mode(const std::string& name) {
  if (name == "edge") return ExchangeMode::kPerEdge;
  if (name == "direction") return ExchangeMode::kPerDirection;
  throw std::invalid_argument("unknown exchange mode: " + name);
}

OrderPolicy parse_order_policy(const std::string& name) {
  if (name == "input") return OrderPolicy::kInputOrder;
  if (name == "degree") return OrderPolicy::kDegreeDescending;
  throw std::invalid_argument("unknown order policy: " + name);
}

const char* to_string(ExchangeMode mode) {
  return mode == ExchangeMode::kPerEdge ? "edge" : "direction";
}

const char* to_string(OrderPolicy policy) {
  return policy == OrderPolicy::kInputOrder ? "input" : "degree";
}

}  // namespace gexlat
