#include "mincut/noi_mincut.hpp"

#include <numeric>
#include <stdexcept>

#include "mincut/contraction.hpp"
#include "mincut/max_heap.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

CapforestScan capforest(const Graph& g, NodeID start) {
  const NodeID n = g.vertex_count();
  CapforestScan scan;
  scan.q.assign(g.entry_count(), 0);
  std::vector<EdgeWeight> r(n, 0);
  std::vector<bool> visited(n, false);
  MaxNodeHeap heap(n);
  heap.push(start, 0);
  while (!heap.empty()) {
    const NodeID v = heap.pop_max().first;
    visited[v] = true;
    scan.last = v;
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      const NodeID u = g.target(e);
      if (visited[u]) continue;
      scan.q[e] = r[u] + g.weight(e);
      r[u] += g.weight(e);
      if (heap.contains(u)) {
        heap.increase_key(u, r[u]);
      } else {
        heap.push(u, r[u]);
      }
    }
  }
  return scan;
}

CutResult disconnected_cut(const Graph& g, const ComponentLabels& components) {
  CutResult result;
  result.value = 0;
  result.side.assign(g.vertex_count(), false);
  for (NodeID v = 0; v < g.vertex_count(); ++v) {
    result.side[v] = components.component[v] == components.component[0];
  }
  return result;
}

CutResult noi_mincut(const Graph& g) {
  const NodeID n = g.vertex_count();
  if (n == 0) return {0, {}, true};
  if (n == 1) return {0, {true}, true};
  const ComponentLabels components = connected_components(g);
  if (components.count > 1) return disconnected_cut(g, components);

  Graph work = g;
  std::vector<NodeID> to_current(n);
  std::iota(to_current.begin(), to_current.end(), NodeID{0});

  auto [min_v, min_d] = min_degree_vertex(work);
  EdgeWeight best_value = min_d;
  std::vector<bool> best_side(n);
  for (NodeID v = 0; v < n; ++v) best_side[v] = to_current[v] == min_v;

  while (work.vertex_count() > 2) {
    const CapforestScan scan = capforest(work, 0);
    UnionFind uf(work.vertex_count());
    for (NodeID v = 0; v < work.vertex_count(); ++v) {
      for (EdgeID e = work.first_entry(v); e < work.last_entry(v); ++e) {
        if (scan.q[e] >= best_value) uf.unite(v, work.target(e));
      }
    }
    if (uf.set_count() == work.vertex_count()) {
      throw std::logic_error("capforest scan certified no contractible edge");
    }
    auto [coarse, level] = contract_marked(work, uf);
    for (NodeID v = 0; v < n; ++v) to_current[v] = level.map[to_current[v]];
    if (coarse.vertex_count() >= 2) {
      const auto [vmin, dmin] = min_degree_vertex(coarse);
      if (dmin < best_value) {
        best_value = dmin;
        for (NodeID v = 0; v < n; ++v) best_side[v] = to_current[v] == vmin;
      }
    }
    work = std::move(coarse);
  }
  return {best_value, std::move(best_side), false};
}

}  // namespace mincut
