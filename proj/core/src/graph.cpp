#include "mincut/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mincut {

Graph Graph::build(NodeID n, std::span<const WeightedEdge> edges) {
  // Validate, drop self-loops, and materialize both directions.
  std::vector<std::pair<NodeID, NodeID>> dir;
  std::vector<EdgeWeight> dir_w;
  dir.reserve(edges.size() * 2);
  dir_w.reserve(edges.size() * 2);
  for (const WeightedEdge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") out of vertex range [0," + std::to_string(n) + ")");
    }
    if (e.weight < 1) {
      throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has non-positive weight " + std::to_string(e.weight));
    }
    if (e.u == e.v) continue;
    dir.emplace_back(e.u, e.v);
    dir.emplace_back(e.v, e.u);
    dir_w.push_back(static_cast<EdgeWeight>(e.weight));
    dir_w.push_back(static_cast<EdgeWeight>(e.weight));
  }

  std::vector<std::size_t> order(dir.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dir[a] < dir[b]; });

  std::vector<EdgeID> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  targets.reserve(dir.size());
  weights.reserve(dir.size());
  std::pair<NodeID, NodeID> prev{kInvalidNode, kInvalidNode};
  for (std::size_t i : order) {
    if (dir[i] == prev) {
      weights.back() += dir_w[i];  // parallel edge: merge
    } else {
      prev = dir[i];
      targets.push_back(dir[i].second);
      weights.push_back(dir_w[i]);
      ++counts[dir[i].first + 1];
    }
  }
  for (NodeID v = 0; v < n; ++v) counts[v + 1] += counts[v];
  return from_csr(std::move(counts), std::move(targets), std::move(weights));
}

Graph Graph::from_csr(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
                      std::vector<EdgeWeight> weights) {
  assert(!offsets.empty());
  assert(targets.size() == weights.size());
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  g.weights_ = std::move(weights);
  const NodeID n = static_cast<NodeID>(g.offsets_.size() - 1);
  g.degree_.assign(n, 0);
  for (NodeID v = 0; v < n; ++v) {
    EdgeWeight d = 0;
    for (EdgeID e = g.offsets_[v]; e < g.offsets_[v + 1]; ++e) d += g.weights_[e];
    g.degree_[v] = d;
    g.total_weight_ += d;
  }
  g.total_weight_ /= 2;
  return g;
}

std::pair<NodeID, EdgeWeight> min_degree_vertex(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("min_degree_vertex on empty graph");
  NodeID best = 0;
  EdgeWeight best_deg = g.weighted_degree(0);
  for (NodeID v = 1; v < g.vertex_count(); ++v) {
    if (g.weighted_degree(v) < best_deg) {
      best = v;
      best_deg = g.weighted_degree(v);
    }
  }
  return {best, best_deg};
}

EdgeWeight cut_capacity(const Graph& g, const std::vector<bool>& side) {
  assert(side.size() == g.vertex_count());
  EdgeWeight total = 0;
  for (NodeID v = 0; v < g.vertex_count(); ++v) {
    if (!side[v]) continue;
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      if (!side[g.target(e)]) total += g.weight(e);
    }
  }
  return total;
}

bool is_proper_bipartition(const std::vector<bool>& side) {
  bool has_a = false, has_b = false;
  for (bool s : side) (s ? has_a : has_b) = true;
  return has_a && has_b;
}

ComponentLabels connected_components(const Graph& g) {
  const NodeID n = g.vertex_count();
  ComponentLabels result;
  result.component.assign(n, kInvalidNode);
  std::vector<NodeID> stack;
  for (NodeID v = 0; v < n; ++v) {
    if (result.component[v] != kInvalidNode) continue;
    const NodeID id = result.count++;
    result.component[v] = id;
    stack.push_back(v);
    while (!stack.empty()) {
      NodeID u = stack.back();
      stack.pop_back();
      for (NodeID w : g.neighbors(u)) {
        if (result.component[w] == kInvalidNode) {
          result.component[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return result;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).count == 1;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  Subgraph sub;
  std::vector<NodeID> new_id(g.vertex_count(), kInvalidNode);
  for (NodeID v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      new_id[v] = static_cast<NodeID>(sub.original_ids.size());
      sub.original_ids.push_back(v);
    }
  }
  const NodeID n = static_cast<NodeID>(sub.original_ids.size());
  std::vector<EdgeID> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  for (NodeID nv = 0; nv < n; ++nv) {
    const NodeID v = sub.original_ids[nv];
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      if (keep[g.target(e)]) {
        targets.push_back(new_id[g.target(e)]);
        weights.push_back(g.weight(e));
      }
    }
    offsets[nv + 1] = targets.size();
  }
  sub.graph = Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
  return sub;
}

Subgraph largest_component(const Graph& g) {
  ComponentLabels labels = connected_components(g);
  std::vector<NodeID> sizes(labels.count, 0);
  for (NodeID v = 0; v < g.vertex_count(); ++v) ++sizes[labels.component[v]];
  // Component ids follow discovery order over ascending vertex ids, so the
  // first maximal component also contains the smallest original id.
  NodeID best = 0;
  for (NodeID c = 1; c < labels.count; ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }
  std::vector<bool> keep(g.vertex_count());
  for (NodeID v = 0; v < g.vertex_count(); ++v) keep[v] = labels.component[v] == best;
  return induced_subgraph(g, keep);
}

}  // namespace mincut
