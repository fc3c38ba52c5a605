#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

/// One input edge for Graph::build. Weights are validated to be >= 1.
struct WeightedEdge {
  NodeID u = 0;
  NodeID v = 0;
  std::int64_t weight = 1;
};

/// Immutable weighted undirected graph in compressed adjacency form.
/// Every undirected edge is stored in both directions; adjacency lists are
/// sorted by target id, parallel edges are merged and self-loops dropped at
/// construction. Weighted degrees are cached. Instances are safe to share
/// across threads for concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Build from an edge list. Throws PreconditionError on ids >= n or
  /// weights < 1. Duplicate (u,v) entries are merged with summed weight.
  static Graph build(NodeID n, std::span<const WeightedEdge> edges);

  /// Adopt a ready-made symmetric CSR (internal fast path for contraction and
  /// generators). offsets.size() == n+1, targets sorted per row, no loops.
  static Graph from_csr(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
                        std::vector<EdgeWeight> weights);

  NodeID vertex_count() const { return static_cast<NodeID>(degree_.size()); }
  /// Number of undirected edges m.
  EdgeID edge_count() const { return targets_.size() / 2; }
  /// Number of stored directed adjacency entries (2m).
  EdgeID entry_count() const { return targets_.size(); }

  EdgeID first_entry(NodeID v) const { return offsets_[v]; }
  EdgeID last_entry(NodeID v) const { return offsets_[v + 1]; }
  NodeID target(EdgeID e) const { return targets_[e]; }
  EdgeWeight weight(EdgeID e) const { return weights_[e]; }

  std::span<const NodeID> neighbors(NodeID v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeWeight> neighbor_weights(NodeID v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  /// Cached weighted degree c(v).
  EdgeWeight weighted_degree(NodeID v) const { return degree_[v]; }
  /// Number of distinct neighbors.
  NodeID unweighted_degree(NodeID v) const {
    return static_cast<NodeID>(offsets_[v + 1] - offsets_[v]);
  }

  /// Sum of all edge weights (each undirected edge counted once).
  EdgeWeight total_weight() const { return total_weight_; }

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<EdgeID> offsets_;      // n+1
  std::vector<NodeID> targets_;      // 2m
  std::vector<EdgeWeight> weights_;  // 2m
  std::vector<EdgeWeight> degree_;   // n, cached c(v)
  EdgeWeight total_weight_ = 0;
};

/// Vertex of minimum weighted degree and that degree; ties break to the
/// lowest id. Requires n >= 1.
std::pair<NodeID, EdgeWeight> min_degree_vertex(const Graph& g);

/// Capacity of the bipartition given by side (true = side A): total weight of
/// edges with endpoints on different sides. A cut with an empty side is
/// degenerate and evaluates to 0; see is_proper_bipartition.
EdgeWeight cut_capacity(const Graph& g, const std::vector<bool>& side);

bool is_proper_bipartition(const std::vector<bool>& side);

struct ComponentLabels {
  std::vector<NodeID> component;  // per-vertex component id, by discovery order
  NodeID count = 0;
};

ComponentLabels connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// An induced subgraph with its vertex id mapping (new id -> original id,
/// ascending in the original ids).
struct Subgraph {
  Graph graph;
  std::vector<NodeID> original_ids;
};

/// Subgraph induced by the vertices with keep[v] == true, relabeled densely
/// in ascending original id order.
Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

/// Largest connected component; ties break to the component containing the
/// smallest original vertex id.
Subgraph largest_component(const Graph& g);

}  // namespace mincut
