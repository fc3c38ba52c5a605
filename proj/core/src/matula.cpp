#include "mincut/matula.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mincut/contraction.hpp"
#include "mincut/noi_mincut.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

CutResult matula_approx(const Graph& g, double epsilon) {
  if (!(epsilon > 0)) throw PreconditionError("matula_approx requires epsilon > 0");
  const NodeID n = g.vertex_count();
  if (n == 0) return {0, {}, true};
  if (n == 1) return {0, {true}, true};
  if (!is_connected(g)) throw PreconditionError("matula_approx requires a connected graph");

  // integer-safe threshold: q >= lambda_hat/(2+eps)  <=>  q*scale >= lambda_hat*1000
  const std::uint64_t scale = static_cast<std::uint64_t>(std::llround((2.0 + epsilon) * 1000.0));

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
    const unsigned __int128 bound = static_cast<unsigned __int128>(best_value) * 1000;
    for (NodeID v = 0; v < work.vertex_count(); ++v) {
      for (EdgeID e = work.first_entry(v); e < work.last_entry(v); ++e) {
        if (static_cast<unsigned __int128>(scan.q[e]) * scale >= bound) {
          uf.unite(v, work.target(e));
        }
      }
    }
    if (uf.set_count() == work.vertex_count()) {
      throw std::logic_error("matula scan certified no contractible edge");
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
