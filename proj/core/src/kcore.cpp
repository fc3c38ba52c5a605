#include "mincut/kcore.hpp"

#include <vector>

namespace mincut {

Subgraph kcore(const Graph& g, NodeID k) {
  if (k < 1) throw PreconditionError("kcore requires k >= 1");
  const NodeID n = g.vertex_count();
  std::vector<NodeID> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<NodeID> queue;
  for (NodeID v = 0; v < n; ++v) {
    degree[v] = g.unweighted_degree(v);
    if (degree[v] < k) {
      removed[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeID v = queue.back();
    queue.pop_back();
    for (NodeID u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--degree[u] < k) {
        removed[u] = true;
        queue.push_back(u);
      }
    }
  }
  std::vector<bool> keep(n);
  for (NodeID v = 0; v < n; ++v) keep[v] = !removed[v];
  return induced_subgraph(g, keep);
}

}  // namespace mincut
