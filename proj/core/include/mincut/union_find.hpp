#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

/// Disjoint sets over [0, n) with path compression and union by rank.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(NodeID n) : parent_(n), rank_(n, 0), set_count_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeID{0});
  }

  NodeID find(NodeID v) {
    NodeID root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      NodeID next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  /// Returns the surviving root, merging if the two sets were distinct.
  NodeID unite(NodeID a, NodeID b) {
    NodeID ra = find(a);
    NodeID rb = find(b);
    if (ra == rb) return ra;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --set_count_;
    return ra;
  }

  bool same_set(NodeID a, NodeID b) { return find(a) == find(b); }
  NodeID set_count() const { return set_count_; }
  NodeID size() const { return static_cast<NodeID>(parent_.size()); }

 private:
  std::vector<NodeID> parent_;
  std::vector<std::uint8_t> rank_;
  NodeID set_count_ = 0;
};

}  // namespace mincut
