#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// A vertex->cluster-label assignment. Labels are arbitrary ids (initially
/// vertex ids; the correcting step may mint fresh ones >= n).
struct Clustering {
  std::vector<NodeID> labels;

  NodeID cluster_count() const;
};

struct LpaConfig {
  int iterations = 2;
  NodeID shuffle_block_size = 128;
  /// First-round rule: vertex i may not change its label once another vertex
  /// moved to block i. Guarantees clusters of size >= 2 in connected graphs.
  bool singleton_guard = false;
  std::uint64_t seed = 0;
  /// > 1 enables the racy shared-label parallel mode (nondeterministic).
  int threads = 1;
};

/// Identity permutation of [0, n) shuffled within consecutive blocks of
/// block_size ids; blocks are visited in natural order. Deterministic per
/// seed.
std::vector<NodeID> block_shuffled_order(NodeID n, NodeID block_size, std::uint64_t seed);

/// Label propagation clustering: each vertex adopts the neighboring label
/// with maximum total incident weight, ties broken uniformly at random;
/// runs cfg.iterations rounds over a block-shuffled traversal.
Clustering label_propagation(const Graph& g, const LpaConfig& cfg);

/// Correcting step: within each cluster of size in [2, log2(n)], extract the
/// first vertex (ascending id) whose removal lowers the cluster's boundary
/// degree below its current value, as a fresh singleton.
Clustering fix_misplaced(const Graph& g, Clustering clustering, int threads = 1);

}  // namespace mincut
