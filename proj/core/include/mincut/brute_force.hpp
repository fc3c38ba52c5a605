#pragma once

#include "mincut/graph.hpp"

namespace mincut {

/// Enumeration oracle: tries all 2^(n-1) - 1 proper bipartitions with vertex
/// 0 pinned to side A and returns the first minimum (lowest-index
/// tie-break). Rejects n > 24.
CutResult brute_force_mincut(const Graph& g);

}  // namespace mincut
