// Test-only oracles: small, direct implementations kept independent of the
// library code paths they cross-check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gexlat/config.hpp"
#include "gexlat/geometry.hpp"

namespace oracles {

inline double dist(const gexlat::Point& a, const gexlat::Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// All-pairs geometric graph definition.
inline std::vector<std::pair<int, int>> rgg_edges(
    std::span<const gexlat::Point> pos, double d) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(pos.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = pos[i].x - pos[j].x;
      const double dy = pos[i].y - pos[j].y;
      if (dx * dx + dy * dy <= d * d) edges.emplace_back(i, j);
    }
  return edges;
}

// min of the four endpoint distances <= d_conf.
inline bool conflict(const std::pair<int, int>& a, const std::pair<int, int>& b,
                     std::span<const gexlat::Point> pos, double d_conf) {
  const double m = std::min(
      std::min(dist(pos[a.first], pos[b.first]), dist(pos[a.first], pos[b.second])),
      std::min(dist(pos[a.second], pos[b.first]), dist(pos[a.second], pos[b.second])));
  return m <= d_conf;
}

// Pairwise conflict adjacency matrix over comm edges.
inline std::vector<std::vector<char>> conflict_matrix(
    const std::vector<std::pair<int, int>>& edges,
    std::span<const gexlat::Point> pos, double d_conf) {
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (conflict(edges[a], edges[b], pos, d_conf)) adj[a][b] = adj[b][a] = 1;
  return adj;
}

// Exact maximum clique by depth-first expansion; fine for n <= 30.
inline int max_clique(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  std::vector<int> candidates(n);
  for (int i = 0; i < n; ++i) candidates[i] = i;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cand,
                                                         int size) {
    if (size + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + static_cast<int>(cand.size()) <= best) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      for (int u : cand)
        if (adj[v][u]) next.push_back(u);
      grow(next, size + 1);
    }
  };
  grow(candidates, 0);
  return std::max(best, n > 0 ? 1 : 0);
}

// Exact chromatic number by trying k = 1, 2, ... with backtracking.
inline int chromatic_number(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> assign = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool fits = true;
      for (int u = 0; u < n && fits; ++u)
        if (adj[v][u] && color[u] == c) fits = false;
      if (fits) {
        color[v] = c;
        if (assign(v + 1, k)) return true;
        color[v] = -1;
      }
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (assign(0, k)) return k;
  }
  return n;
}

// Visits every partition of {0..n-1} into conflict-free blocks.
inline void for_each_proper_partition(
    const std::vector<std::vector<char>>& adj,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      visit(blocks);
      return;
    }
    // index-based: recursion grows and shrinks `blocks`, which may reallocate
    const std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      bool fits = true;
      for (int u : blocks[bi])
        if (adj[v][u]) fits = false;
      if (fits) {
        blocks[bi].push_back(v);
        place(v + 1);
        blocks[bi].pop_back();
      }
    }
    blocks.emplace_back(1, v);
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
}

// Short-range physics (reference SNR ~2.5e3) so conflict graphs keep
// nontrivial structure at small n.
inline gexlat::NetworkConfig mild_config(int n, double beta,
                                         std::uint64_t seed) {
  gexlat::NetworkConfig cfg;
  cfg.n = n;
  cfg.beta = beta;
  cfg.power_dbm = 0.0;
  cfg.seed = seed;
  return cfg;
}

// The printed parameter set: 100 m disk, 30 dBm, -174 dBm/Hz, 10 MHz,
// alpha 2, reference gain 1e-7.
inline gexlat::NetworkConfig reference_config(int n, double beta,
                                              std::uint64_t seed) {
  gexlat::NetworkConfig cfg;
  cfg.n = n;
  cfg.beta = beta;
  cfg.seed = seed;
  return cfg;
}

}  // namespace oracles
