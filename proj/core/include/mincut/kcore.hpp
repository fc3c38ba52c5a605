#pragma once

#include "mincut/graph.hpp"

namespace mincut {

/// Maximum subgraph in which every vertex keeps at least k neighbors
/// (unweighted degree), computed by iterative peeling. The result may be
/// empty; original_ids maps new ids back to input ids. Requires k >= 1.
Subgraph kcore(const Graph& g, NodeID k);

}  // namespace mincut
