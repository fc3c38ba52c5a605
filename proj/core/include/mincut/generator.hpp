#pragma once

#include <cstdint>

#include "mincut/graph.hpp"

namespace mincut {

/// Parameters for the clustered Erdos-Renyi family: n vertices in k
/// round-robin clusters (vertex v belongs to cluster v mod k), edge count
/// m = round(n*(n-1)/2 * d/100), inter-cluster weights uniform in [1,100],
/// intra-cluster weights uniform in [1,100] times n.
struct ClusteredErParams {
  NodeID n = 0;
  double density_percent = 0;  // 0 < d <= 100
  NodeID clusters = 1;         // 1 <= k <= n
  std::uint64_t seed = 0;
};

/// Edge count implied by (n, d), rounded half up.
EdgeID clustered_er_edge_count(NodeID n, double density_percent);

/// Deterministic for a fixed seed: same seed, bit-identical graph.
Graph generate_clustered_er(const ClusteredErParams& params);

}  // namespace mincut
