#pragma once

#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// One CAPFOREST (maximum-adjacency) scan. q holds, per directed adjacency
/// entry, the certified lower bound on the connectivity between the entry's
/// endpoints; exactly one direction of each reached edge is set, the other
/// stays 0. `last` is the vertex extracted last.
struct CapforestScan {
  std::vector<EdgeWeight> q;
  NodeID last = kInvalidNode;
};

/// Scan from `start`, visiting the unvisited vertex most strongly connected
/// to the visited set. When visiting v, an edge (v,u) to unvisited u gets
/// q(v,u) = r(u) + c(v,u) before r(u) is increased by c(v,u).
CapforestScan capforest(const Graph& g, NodeID start);

/// Exact minimum cut (Nagamochi-Ono-Ibaraki): repeat CAPFOREST scans and
/// contract every edge with q(e) >= lambda_hat until two vertices remain,
/// tracking the best trivial cut. Disconnected input yields value 0 with a
/// component as side A.
CutResult noi_mincut(const Graph& g);

/// Value-0 cut splitting off the component of vertex 0. Requires >= 2
/// components.
CutResult disconnected_cut(const Graph& g, const ComponentLabels& components);

}  // namespace mincut
