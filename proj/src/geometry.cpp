#include "gexlat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <random>
#include <stdexcept>

#include "gexlat/channel.hpp"

namespace gexlat {

namespace {

// 53-bit mantissa draw in [0, 1); the engine is fully specified by the
// standard, so coordinate streams are reproducible from the seed alone.
double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point> place_nodes(const NetworkConfig& cfg) {
  std::mt19937_64 gen(cfg.seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    const double u = next_uniform(gen);
    const double v = next_uniform(gen);
    const double r = cfg.radius_m * std::sqrt(u);
    const double theta = 2.0 * std::numbers::pi * v;
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

double comm_threshold(const NetworkConfig& cfg) {
  return cfg.radius_m * std::pow(static_cast<double>(cfg.n), -cfg.beta);
}

double conf_threshold(const NetworkConfig& cfg) {
  const double gamma = snr_ref(cfg);
  return std::pow(gamma, 1.0 / (2.0 * cfg.alpha)) * std::sqrt(comm_threshold(cfg));
}

bool connectivity_warning(const NetworkConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  return std::pow(n, 1.0 - 2.0 * cfg.beta) < std::log(n) + 3.0;
}

SpatialGrid::SpatialGrid(std::span<const Point> pts, double cell_size)
    : pts_(pts) {
  if (!(cell_size > 0.0)) throw std::invalid_argument("cell size must be > 0");
  if (pts.empty()) return;

  double max_x = pts[0].x, max_y = pts[0].y;
  min_x_ = pts[0].x;
  min_y_ = pts[0].y;
  for (const Point& p : pts) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }

  // Keep the table O(n) cells even for radii far below the point extent.
  const double span = std::max(max_x - min_x_, max_y - min_y_);
  const double min_cell = span / std::sqrt(16.0 * static_cast<double>(pts.size()) + 1024.0);
  cell_ = std::max(cell_size, min_cell);

  nx_ = static_cast<int>((max_x - min_x_) / cell_) + 1;
  ny_ = static_cast<int>((max_y - min_y_) / cell_) + 1;

  const std::size_t cells = static_cast<std::size_t>(nx_) * ny_;
  offsets_.assign(cells + 1, 0);
  for (const Point& p : pts)
    ++offsets_[static_cast<std::size_t>(clamp_y(cell_y(p.y))) * nx_ +
               clamp_x(cell_x(p.x)) + 1];
  for (std::size_t c = 1; c <= cells; ++c) offsets_[c] += offsets_[c - 1];

  items_.resize(pts.size());
  std::vector<std::int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t cell =
        static_cast<std::size_t>(clamp_y(cell_y(pts[i].y))) * nx_ +
        clamp_x(cell_x(pts[i].x));
    items_[cursor[cell]++] = static_cast<std::int32_t>(i);
  }
}

CommGraph build_comm_graph(std::span<const Point> pos, double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be > 0");
  CommGraph g;
  g.n = static_cast<int>(pos.size());

  if (!pos.empty()) {
    SpatialGrid grid(pos, threshold);
    for (int v = 0; v < g.n; ++v) {
      grid.for_each_within(pos[v], threshold, [&](int u) {
        if (u > v) g.edges.emplace_back(v, u);
      });
    }
  }
  std::sort(g.edges.begin(), g.edges.end());

  g.adj_offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& [i, j] : g.edges) {
    ++g.adj_offsets[static_cast<std::size_t>(i) + 1];
    ++g.adj_offsets[static_cast<std::size_t>(j) + 1];
  }
  for (int v = 0; v < g.n; ++v) g.adj_offsets[v + 1] += g.adj_offsets[v];

  g.adj_nodes.resize(2 * g.edges.size());
  g.adj_edges.resize(2 * g.edges.size());
  std::vector<std::int64_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [i, j] = g.edges[k];
    g.adj_nodes[cursor[i]] = j;
    g.adj_edges[cursor[i]++] = static_cast<int>(k);
    g.adj_nodes[cursor[j]] = i;
    g.adj_edges[cursor[j]++] = static_cast<int>(k);
  }
  return g;
}

bool is_connected(const CommGraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == g.n;
}

bool is_connected_union_find(const CommGraph& g) {
  if (g.n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = g.n;
  for (const auto& [i, j] : g.edges) {
    const int ri = find(i), rj = find(j);
    if (ri != rj) {
      parent[ri] = rj;
      --components;
    }
  }
  return components == 1;
}

int clique_lower_bound(std::span<const Point> pos, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be > 0");
  if (pos.empty()) return 0;
  const double half = r / 2.0;
  SpatialGrid grid(pos, half);
  int best = 0;
  for (const Point& p : pos) {
    int count = 0;
    grid.for_each_within(p, half, [&](int) { ++count; });
    best = std::max(best, count);
  }
  return best;
}

ConflictAdjacency::ConflictAdjacency(const CommGraph& comm,
                                     std::span<const Point> pos, double d_conf)
    : comm_(&comm),
      pos_(pos),
      d_conf_(d_conf),
      grid_(pos, d_conf),
      node_mark_(pos.size(), 0),
      edge_mark_(comm.edges.size(), 0) {
  if (!(d_conf > 0.0)) throw std::invalid_argument("d_conf must be > 0");
}

ConflictGraph build_conflict_graph(const CommGraph& comm,
                                   std::span<const Point> pos, double d_conf) {
  ConflictGraph g;
  const int m = static_cast<int>(comm.edges.size());
  g.num_vertices = m;
  g.adj_offsets.assign(static_cast<std::size_t>(m) + 1, 0);
  if (m == 0) return g;

  ConflictAdjacency adj(comm, pos, d_conf);
  for (int e = 0; e < m; ++e) {
    const int d = adj.degree(e);
    g.adj_offsets[e + 1] = g.adj_offsets[e] + d;
    g.max_degree = std::max(g.max_degree, d);
  }
  g.adj.resize(static_cast<std::size_t>(g.adj_offsets[m]));
  for (int e = 0; e < m; ++e) {
    std::int64_t at = g.adj_offsets[e];
    adj.for_each_neighbor(e, [&](int f) { g.adj[at++] = f; });
    std::sort(g.adj.begin() + g.adj_offsets[e], g.adj.begin() + at);
  }
  return g;
}

std::string serialize_topology(std::span<const Point> pos,
                               const CommGraph& comm) {
  std::string out = "node,x,y\n";
  char buf[96];
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g\n", i, pos[i].x, pos[i].y);
    out += buf;
  }
  out += "edge,src,dst\n";
  for (std::size_t k = 0; k < comm.edges.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%d,%d\n", k, comm.edges[k].first,
                  comm.edges[k].second);
    out += buf;
  }
  return out;
}

}  // namespace gexlat
