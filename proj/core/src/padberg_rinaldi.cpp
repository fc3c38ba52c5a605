#include "mincut/padberg_rinaldi.hpp"

#include <algorithm>
#include <atomic>

#include "mincut/parallel.hpp"

namespace mincut {

void pr_pass_12(const Graph& g, PrState& state) {
  const NodeID n = g.vertex_count();
  std::vector<EdgeWeight> degree(n);
  for (NodeID v = 0; v < n; ++v) degree[v] = g.weighted_degree(v);

  for (NodeID v = 0; v < n; ++v) {
    const bool v_pendant = g.unweighted_degree(v) == 1;
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      const NodeID u = g.target(e);
      if (u <= v) continue;  // each undirected edge once
      if (v_pendant || g.unweighted_degree(u) == 1) continue;
      const NodeID rv = state.uf.find(v);
      const NodeID ru = state.uf.find(u);
      if (rv == ru) continue;
      const EdgeWeight w = g.weight(e);
      const bool cond1 = w >= state.lambda_hat;
      const bool cond2 = degree[rv] <= 2 * w || degree[ru] <= 2 * w;
      if (cond1 || cond2) {
        // merged supervertex keeps the summed degree minus the contracted
        // edge; parallel fine edges between the groups stay counted, which
        // only over-estimates and keeps condition 2 conservative
        const NodeID root = state.uf.unite(rv, ru);
        degree[root] = degree[rv] + degree[ru] - 2 * w;
      }
    }
  }
}

void pr_pass_34(const Graph& g, PrState& state) {
  const NodeID n = g.vertex_count();
  std::vector<EdgeWeight> nbr_weight(n, 0);
  std::vector<NodeID> nbr_stamp(n, kInvalidNode);

  for (NodeID v = 0; v < n; ++v) {
    if (state.scanned[v] != 0) continue;
    if (g.unweighted_degree(v) == 1) continue;
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      const NodeID u = g.target(e);
      if (state.scanned[u] != 0) continue;
      if (g.unweighted_degree(u) == 1) continue;
      if (state.uf.same_set(v, u)) continue;

      const EdgeWeight w = g.weight(e);
      const EdgeWeight deg_v = g.weighted_degree(v);
      const EdgeWeight deg_u = g.weighted_degree(u);
      state.touched += g.unweighted_degree(v) + g.unweighted_degree(u);
      for (EdgeID f = g.first_entry(v); f < g.last_entry(v); ++f) {
        nbr_stamp[g.target(f)] = v;
        nbr_weight[g.target(f)] = g.weight(f);
      }
      bool cond3 = false;
      EdgeWeight common_min_sum = 0;
      for (EdgeID f = g.first_entry(u); f < g.last_entry(u); ++f) {
        const NodeID x = g.target(f);
        if (x == v || nbr_stamp[x] != v) continue;  // common neighborhood only
        const EdgeWeight wvx = nbr_weight[x];
        const EdgeWeight wux = g.weight(f);
        if (deg_v <= 2 * (w + wvx) && deg_u <= 2 * (w + wux)) cond3 = true;
        common_min_sum += std::min(wvx, wux);
      }
      if (cond3 || w + common_min_sum >= state.lambda_hat) state.uf.unite(v, u);
      state.scanned[v] = 1;
      state.scanned[u] = 1;
      break;
    }
  }
}

namespace {

// Parallel variants: conditions 1, 3 and 4 only, evaluated on immutable
// pass-start state (edge weights, snapshot degrees and lambda_hat); unions
// applied by one thread afterwards.
void pr_pass_1_parallel(const Graph& g, PrState& state, int threads) {
  std::vector<std::vector<std::pair<NodeID, NodeID>>> marks(threads);
  parallel_chunks(0, g.vertex_count(), threads, [&](int t, std::uint64_t lo, std::uint64_t hi) {
    auto& local = marks[t];
    for (NodeID v = static_cast<NodeID>(lo); v < hi; ++v) {
      if (g.unweighted_degree(v) == 1) continue;
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        const NodeID u = g.target(e);
        if (u <= v || g.unweighted_degree(u) == 1) continue;
        if (g.weight(e) >= state.lambda_hat) local.emplace_back(v, u);
      }
    }
  });
  for (const auto& thread_marks : marks) {
    for (const auto& [v, u] : thread_marks) state.uf.unite(v, u);
  }
}

void pr_pass_34_parallel(const Graph& g, PrState& state, int threads) {
  const NodeID n = g.vertex_count();
  std::vector<std::vector<std::pair<NodeID, NodeID>>> marks(threads);
  parallel_chunks(0, n, threads, [&](int t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<EdgeWeight> nbr_weight(n, 0);
    std::vector<NodeID> nbr_stamp(n, kInvalidNode);
    auto& local = marks[t];
    for (NodeID v = static_cast<NodeID>(lo); v < hi; ++v) {
      if (g.unweighted_degree(v) == 1) continue;
      std::atomic_ref<std::uint8_t> v_flag(state.scanned[v]);
      if (v_flag.load(std::memory_order_relaxed) != 0) continue;
      if (v_flag.exchange(1, std::memory_order_relaxed) != 0) continue;
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        const NodeID u = g.target(e);
        if (g.unweighted_degree(u) == 1) continue;
        std::atomic_ref<std::uint8_t> u_flag(state.scanned[u]);
        if (u_flag.load(std::memory_order_relaxed) != 0) continue;
        if (u_flag.exchange(1, std::memory_order_relaxed) != 0) continue;

        const EdgeWeight w = g.weight(e);
        const EdgeWeight deg_v = g.weighted_degree(v);
        const EdgeWeight deg_u = g.weighted_degree(u);
        for (EdgeID f = g.first_entry(v); f < g.last_entry(v); ++f) {
          nbr_stamp[g.target(f)] = v;
          nbr_weight[g.target(f)] = g.weight(f);
        }
        bool cond3 = false;
        EdgeWeight common_min_sum = 0;
        for (EdgeID f = g.first_entry(u); f < g.last_entry(u); ++f) {
          const NodeID x = g.target(f);
          if (x == v || nbr_stamp[x] != v) continue;
          const EdgeWeight wvx = nbr_weight[x];
          const EdgeWeight wux = g.weight(f);
          if (deg_v <= 2 * (w + wvx) && deg_u <= 2 * (w + wux)) cond3 = true;
          common_min_sum += std::min(wvx, wux);
        }
        if (cond3 || w + common_min_sum >= state.lambda_hat) local.emplace_back(v, u);
        break;
      }
    }
  });
  for (const auto& thread_marks : marks) {
    for (const auto& [v, u] : thread_marks) state.uf.unite(v, u);
  }
}

}  // namespace

PrRunResult pr_run(Graph g, EdgeWeight lambda_hat, NodeID stop_vertex_count, int threads) {
  PrRunResult result;
  result.graph = std::move(g);
  result.lambda_hat = lambda_hat;
  const NodeID stop = std::max<NodeID>(stop_vertex_count, 2);

  while (result.graph.vertex_count() > stop) {
    PrState state(result.graph, result.lambda_hat);
    if (threads > 1) {
      pr_pass_1_parallel(result.graph, state, threads);
      pr_pass_34_parallel(result.graph, state, threads);
    } else {
      pr_pass_12(result.graph, state);
      pr_pass_34(result.graph, state);
    }
    if (state.uf.set_count() == result.graph.vertex_count()) break;  // nothing marked

    auto [coarse, level] = contract_marked(result.graph, state.uf);
    PrLevel pr_level;
    pr_level.level = std::move(level);
    if (coarse.vertex_count() >= 2) {
      const auto [vmin, dmin] = min_degree_vertex(coarse);
      pr_level.coarse_min_degree = dmin;
      pr_level.coarse_min_degree_vertex = vmin;
      result.lambda_hat = std::min(result.lambda_hat, dmin);
    }
    result.levels.push_back(std::move(pr_level));
    result.graph = std::move(coarse);
    ++result.runs;
  }
  return result;
}

}  // namespace mincut
