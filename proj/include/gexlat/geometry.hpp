#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gexlat/config.hpp"

namespace gexlat {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// n points i.i.d. uniform on the disk of radius cfg.radius_m, via the polar
// inverse-CDF map r = R*sqrt(u), theta = 2*pi*v. Consumes exactly two
// uniforms per node, so the output is a pure function of cfg.seed.
std::vector<Point> place_nodes(const NetworkConfig& cfg);

// Link activation range: R * n^-beta.
double comm_threshold(const NetworkConfig& cfg);

// Interference guard range: gamma^(1/(2*alpha)) * sqrt(comm_threshold).
// Square it and divide by comm_threshold and you get gamma^(1/alpha).
double conf_threshold(const NetworkConfig& cfg);

// True when the expected degree n^(1-2*beta) falls under ln(n)+3, i.e. the
// instance sits below the connectivity regime and disconnected draws are
// likely at this n.
bool connectivity_warning(const NetworkConfig& cfg);

// Fixed-radius neighbor index: uniform bucket grid over the points' bounding
// box, cell size == query radius (clamped so the table stays O(n) cells).
// Holds a view of the caller's points; keep them alive while querying.
class SpatialGrid {
 public:
  SpatialGrid(std::span<const Point> pts, double cell_size);

  // Visits the index of every point with distance(center, point) <= r.
  template <class F>
  void for_each_within(const Point& center, double r, F&& fn) const {
    if (nx_ == 0) return;
    const int x0 = clamp_x(cell_x(center.x - r));
    const int x1 = clamp_x(cell_x(center.x + r));
    const int y0 = clamp_y(cell_y(center.y - r));
    const int y1 = clamp_y(cell_y(center.y + r));
    const double r2 = r * r;
    for (int cy = y0; cy <= y1; ++cy) {
      for (int cx = x0; cx <= x1; ++cx) {
        const int cell = cy * nx_ + cx;
        for (std::int32_t k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
          const int idx = items_[k];
          const double dx = pts_[idx].x - center.x;
          const double dy = pts_[idx].y - center.y;
          if (dx * dx + dy * dy <= r2) fn(idx);
        }
      }
    }
  }

  double cell_size() const { return cell_; }

 private:
  int cell_x(double x) const { return static_cast<int>((x - min_x_) / cell_); }
  int cell_y(double y) const { return static_cast<int>((y - min_y_) / cell_); }
  int clamp_x(int c) const { return c < 0 ? 0 : (c >= nx_ ? nx_ - 1 : c); }
  int clamp_y(int c) const { return c < 0 ? 0 : (c >= ny_ ? ny_ - 1 : c); }

  std::span<const Point> pts_;
  double cell_ = 1.0;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  int nx_ = 0;
  int ny_ = 0;
  std::vector<std::int32_t> offsets_;
  std::vector<std::int32_t> items_;
};

// Undirected geometric graph: edge (i,j), i<j, iff distance(i,j) <= threshold.
// Edge list is sorted lexicographically; adjacency is CSR with neighbor lists
// in ascending node order and the comm-edge id carried alongside.
struct CommGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> adj_offsets;
  std::vector<int> adj_nodes;
  std::vector<int> adj_edges;

  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges.size()); }

  std::span<const int> neighbors(int v) const {
    return {adj_nodes.data() + adj_offsets[v],
            static_cast<std::size_t>(adj_offsets[v + 1] - adj_offsets[v])};
  }
  std::span<const int> incident_edges(int v) const {
    return {adj_edges.data() + adj_offsets[v],
            static_cast<std::size_t>(adj_offsets[v + 1] - adj_offsets[v])};
  }
};

CommGraph build_comm_graph(std::span<const Point> pos, double threshold);

// Single connected component? Breadth-first traversal.
bool is_connected(const CommGraph& g);
// Same predicate through a disjoint-set union; kept as an independent route
// and cross-checked against the BFS answer in the invariant suites.
bool is_connected_union_find(const CommGraph& g);

// Largest number of points inside any ball of radius r/2 centered at a point
// (the center included). Any point set of diameter <= r is mutually adjacent
// at threshold r, so this is a clique lower bound.
int clique_lower_bound(std::span<const Point> pos, double r);

// Graph on comm edges: two edges conflict iff the minimum of their four
// endpoint distances is <= d_conf. Edges sharing a node always conflict.
struct ConflictGraph {
  int num_vertices = 0;
  std::vector<std::int64_t> adj_offsets;
  std::vector<int> adj;
  int max_degree = 0;

  std::span<const int> neighbors(int v) const {
    return {adj.data() + adj_offsets[v],
            static_cast<std::size_t>(adj_offsets[v + 1] - adj_offsets[v])};
  }
};

ConflictGraph build_conflict_graph(const CommGraph& comm,
                                   std::span<const Point> pos, double d_conf);

// On-demand conflict adjacency. Conflict neighbors of edge (i,j) are exactly
// the comm edges incident to some node within d_conf of i or of j, so they
// can be enumerated through a node-radius grid without materializing the
// conflict graph (which is nearly complete at realistic guard distances).
// Mutable scratch inside; use one instance per worker.
class ConflictAdjacency {
 public:
  ConflictAdjacency(const CommGraph& comm, std::span<const Point> pos,
                    double d_conf);

  int num_vertices() const { return static_cast<int>(comm_->edges.size()); }

  // Visits each distinct conflicting edge id exactly once; never e itself.
  template <class F>
  void for_each_neighbor(int e, F&& fn) {
    ++stamp_;
    edge_mark_[e] = stamp_;
    const auto [i, j] = comm_->edges[e];
    visit_ball(i, fn);
    visit_ball(j, fn);
  }

  int degree(int e) {
    int d = 0;
    for_each_neighbor(e, [&](int) { ++d; });
    return d;
  }

 private:
  template <class F>
  void visit_ball(int center, F& fn) {
    grid_.for_each_within(pos_[center], d_conf_, [&](int u) {
      if (node_mark_[u] == stamp_) return;
      node_mark_[u] = stamp_;
      for (int f : comm_->incident_edges(u)) {
        if (edge_mark_[f] != stamp_) {
          edge_mark_[f] = stamp_;
          fn(f);
        }
      }
    });
  }

  const CommGraph* comm_;
  std::span<const Point> pos_;
  double d_conf_;
  SpatialGrid grid_;
  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> node_mark_;
  std::vector<std::uint64_t> edge_mark_;
};

// Canonical text form: a `node,x,y` block (9 significant digits) followed by
// an `edge,src,dst` block, LF line endings. Golden-file friendly.
std::string serialize_topology(std::span<const Point> pos, const CommGraph& comm);

}  // namespace gexlat
