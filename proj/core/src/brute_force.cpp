#include "mincut/brute_force.hpp"

namespace mincut {

CutResult brute_force_mincut(const Graph& g) {
  const NodeID n = g.vertex_count();
  if (n == 0) return {0, {}, true};
  if (n == 1) return {0, {true}, true};
  if (n > 24) throw PreconditionError("brute_force_mincut rejects n > 24");

  const std::uint32_t mask_end = (std::uint32_t{1} << (n - 1)) - 1;  // all-ones = improper
  EdgeWeight best_value = kInfiniteWeight;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
    // side A = vertex 0 plus the mask bits over vertices 1..n-1
    EdgeWeight capacity = 0;
    for (NodeID v = 0; v < n; ++v) {
      const bool side_v = v == 0 || ((mask >> (v - 1)) & 1u) != 0;
      if (!side_v) continue;
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        const NodeID u = g.target(e);
        const bool side_u = u == 0 || ((mask >> (u - 1)) & 1u) != 0;
        if (!side_u) capacity += g.weight(e);
      }
    }
    if (capacity < best_value) {
      best_value = capacity;
      best_mask = mask;
    }
  }
  CutResult result;
  result.value = best_value;
  result.side.assign(n, false);
  result.side[0] = true;
  for (NodeID v = 1; v < n; ++v) result.side[v] = ((best_mask >> (v - 1)) & 1u) != 0;
  return result;
}

}  // namespace mincut
