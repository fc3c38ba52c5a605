#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/random.hpp"

namespace mincut::testutil {

inline Graph make_graph(NodeID n, const std::vector<WeightedEdge>& edges) {
  return Graph::build(n, edges);
}

inline Graph path(NodeID n) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<NodeID>(v + 1), 1});
  return Graph::build(n, edges);
}

/// Cycle 0-1-...-(n-1)-0 with the given edge weights, edge i = (i, i+1 mod n).
inline Graph cycle(const std::vector<std::int64_t>& weights) {
  const NodeID n = static_cast<NodeID>(weights.size());
  std::vector<WeightedEdge> edges;
  for (NodeID v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<NodeID>((v + 1) % n), weights[v]});
  }
  return Graph::build(n, edges);
}

inline Graph complete(NodeID n, std::int64_t w = 1) {
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return Graph::build(n, edges);
}

/// Star with the center at vertex 0.
inline Graph star(NodeID leaves) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return Graph::build(leaves + 1, edges);
}

/// Two unit-weight K4s (0..3 and 4..7) joined by the unit edge (3,4).
inline Graph two_k4_bridge() {
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < 4; ++u) {
    for (NodeID v = u + 1; v < 4; ++v) {
      edges.push_back({u, v, 1});
      edges.push_back({static_cast<NodeID>(u + 4), static_cast<NodeID>(v + 4), 1});
    }
  }
  edges.push_back({3, 4, 1});
  return Graph::build(8, edges);
}

/// Complete bipartite K3,3, unit weights: no PR condition fires on it.
inline Graph k33() {
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < 3; ++u) {
    for (NodeID v = 3; v < 6; ++v) edges.push_back({u, v, 1});
  }
  return Graph::build(6, edges);
}

/// Random spanning tree plus density*pairs extra edges; always connected.
inline Graph random_connected_graph(Rng& rng, NodeID n, double density, std::int64_t wmin,
                                    std::int64_t wmax) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 1; v < n; ++v) {
    edges.push_back({static_cast<NodeID>(rng.bounded(v)), v,
                     static_cast<std::int64_t>(rng.uniform(wmin, wmax))});
  }
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      if (rng.bounded(1000) < static_cast<std::uint64_t>(density * 1000)) {
        edges.push_back({u, v, static_cast<std::int64_t>(rng.uniform(wmin, wmax))});
      }
    }
  }
  return Graph::build(n, edges);
}

/// Random graph without a connectivity guarantee.
inline Graph random_graph(Rng& rng, NodeID n, double density, std::int64_t wmin,
                          std::int64_t wmax) {
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      if (rng.bounded(1000) < static_cast<std::uint64_t>(density * 1000)) {
        edges.push_back({u, v, static_cast<std::int64_t>(rng.uniform(wmin, wmax))});
      }
    }
  }
  return Graph::build(n, edges);
}

/// Enumeration oracle for the smallest cut separating a from b (n <= 20).
inline EdgeWeight brute_lambda_between(const Graph& g, NodeID a, NodeID b) {
  const NodeID n = g.vertex_count();
  EdgeWeight best = kInfiniteWeight;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (((mask >> a) & 1u) == 0 || ((mask >> b) & 1u) != 0) continue;
    std::vector<bool> side(n);
    for (NodeID v = 0; v < n; ++v) side[v] = ((mask >> v) & 1u) != 0;
    best = std::min(best, cut_capacity(g, side));
  }
  return best;
}

/// Lift a coarse side marker through a dense label map.
inline std::vector<bool> lift_side(const std::vector<NodeID>& dense,
                                   const std::vector<bool>& coarse_side) {
  std::vector<bool> side(dense.size());
  for (std::size_t v = 0; v < dense.size(); ++v) side[v] = coarse_side[dense[v]];
  return side;
}

}  // namespace mincut::testutil
