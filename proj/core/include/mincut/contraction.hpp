#pragma once

#include <utility>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

/// One coarsening level: a total, surjective map from every finer-graph
/// vertex onto the coarse vertex range [0, coarse_n).
struct ContractionLevel {
  std::vector<NodeID> map;
  NodeID coarse_n = 0;
};

/// Append-only stack of coarsening levels. Supports projecting the original
/// vertices down to the coarsest graph and lifting a coarsest-level side
/// marker back up (solution transfer).
class ContractionMap {
 public:
  void push(ContractionLevel level) { levels_.push_back(std::move(level)); }

  std::size_t level_count() const { return levels_.size(); }
  const ContractionLevel& level(std::size_t i) const { return levels_[i]; }

  /// Map an original (level-0) vertex to its coarsest supervertex.
  NodeID project(NodeID v) const {
    for (const ContractionLevel& l : levels_) v = l.map[v];
    return v;
  }

  /// Transfer a side marker on the coarsest graph back to the original
  /// vertices, level by level.
  std::vector<bool> lift_marker(const std::vector<bool>& coarse_side) const;

 private:
  std::vector<ContractionLevel> levels_;
};

/// Contract each block of the clustering into a single vertex. Coarse blocks
/// are numbered by first appearance over ascending vertex ids; the coarse
/// edge (A,B) carries the summed weight of all fine edges between the blocks
/// and intra-block edges vanish. Labels may be any ids (not necessarily
/// dense).
std::pair<Graph, ContractionLevel> contract_clustering(const Graph& g,
                                                       const std::vector<NodeID>& labels);

/// Contract all union-find groups (marked edges already unioned); identical
/// semantics to contract_clustering with the root of v as its label.
std::pair<Graph, ContractionLevel> contract_marked(const Graph& g, UnionFind& uf);

/// Densify arbitrary labels to [0, k) by first appearance; returns the dense
/// labels and k.
std::pair<std::vector<NodeID>, NodeID> densify_labels(const std::vector<NodeID>& labels);

/// Parallel cluster contraction used by the pipeline; equivalent output up to
/// the identical coarse graph, built with `threads` workers. Picks the
/// cluster-level or per-thread-buffer strategy based on the cluster count.
std::pair<Graph, ContractionLevel> contract_clustering_parallel(
    const Graph& g, const std::vector<NodeID>& labels, int threads);

}  // namespace mincut
