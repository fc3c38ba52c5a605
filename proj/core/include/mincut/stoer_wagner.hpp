#pragma once

#include "mincut/graph.hpp"

namespace mincut {

/// Exact minimum cut via n-1 maximum-adjacency minimum-cut phases. Kept as
/// an independent oracle against noi_mincut; disconnected input yields a
/// value-0 component split.
CutResult stoer_wagner(const Graph& g);

}  // namespace mincut
