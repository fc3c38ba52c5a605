#include "mincut/stoer_wagner.hpp"

#include <unordered_map>
#include <vector>

#include "mincut/max_heap.hpp"
#include "mincut/noi_mincut.hpp"

namespace mincut {

CutResult stoer_wagner(const Graph& g) {
  const NodeID n = g.vertex_count();
  if (n == 0) return {0, {}, true};
  if (n == 1) return {0, {true}, true};
  const ComponentLabels components = connected_components(g);
  if (components.count > 1) return disconnected_cut(g, components);

  std::vector<std::unordered_map<NodeID, EdgeWeight>> adj(n);
  for (NodeID v = 0; v < n; ++v) {
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      adj[v].emplace(g.target(e), g.weight(e));
    }
  }
  std::vector<bool> active(n, true);
  std::vector<std::vector<NodeID>> group(n);
  for (NodeID v = 0; v < n; ++v) group[v] = {v};
  NodeID active_count = n;

  EdgeWeight best_value = kInfiniteWeight;
  std::vector<bool> best_side(n, false);

  std::vector<bool> added(n);
  while (active_count > 1) {
    NodeID start = kInvalidNode;
    for (NodeID v = 0; v < n; ++v) {
      if (active[v]) {
        start = v;
        break;
      }
    }
    // maximum adjacency order; the vertex added last defines the phase cut
    added.assign(n, false);
    MaxNodeHeap heap(n);
    heap.push(start, 0);
    NodeID second_last = kInvalidNode;
    NodeID last = kInvalidNode;
    EdgeWeight last_key = 0;
    while (!heap.empty()) {
      const auto [v, key] = heap.pop_max();
      added[v] = true;
      second_last = last;
      last = v;
      last_key = key;
      for (const auto& [u, w] : adj[v]) {
        if (!active[u] || added[u]) continue;
        if (heap.contains(u)) {
          heap.increase_key(u, heap.key(u) + w);
        } else {
          heap.push(u, w);
        }
      }
    }
    if (last_key < best_value) {
      best_value = last_key;
      best_side.assign(n, false);
      for (NodeID v : group[last]) best_side[v] = true;
    }
    // merge the last vertex into the second to last
    for (const auto& [u, w] : adj[last]) {
      adj[u].erase(last);
      if (u == second_last) continue;
      adj[second_last][u] += w;
      adj[u][second_last] += w;
    }
    adj[last].clear();
    group[second_last].insert(group[second_last].end(), group[last].begin(), group[last].end());
    group[last].clear();
    active[last] = false;
    --active_count;
  }
  return {best_value, std::move(best_side), false};
}

}  // namespace mincut
