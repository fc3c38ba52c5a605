#pragma once

#include <vector>

#include "mincut/contraction.hpp"
#include "mincut/graph.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

/// State of one Padberg-Rinaldi run over a fixed graph: the current cut
/// upper bound, the union-find collecting marked edges, and the pass-2 scan
/// flags. `touched` counts adjacency entries streamed by the neighborhood
/// sweeps (test instrumentation; bounded by 2m per pass).
struct PrState {
  explicit PrState(const Graph& g, EdgeWeight lambda_hat_)
      : lambda_hat(lambda_hat_), uf(g.vertex_count()), scanned(g.vertex_count(), 0) {}

  EdgeWeight lambda_hat;
  UnionFind uf;
  std::vector<std::uint8_t> scanned;
  EdgeID touched = 0;
};

/// Pass one: conditions 1 and 2 on every edge, with supervertex degrees
/// maintained incrementally under the unions made earlier in the pass.
/// An edge that is the only one at either endpoint is never marked.
void pr_pass_12(const Graph& g, PrState& state);

/// Pass two: conditions 3 and 4, evaluated over the common neighborhood of
/// each edge whose endpoints are both unscanned; afterwards both endpoints
/// are marked scanned, so each edge is processed at most twice.
void pr_pass_34(const Graph& g, PrState& state);

/// One contraction level produced by a PR run, with the min-degree candidate
/// of the coarse graph (valid when coarse_n >= 2).
struct PrLevel {
  ContractionLevel level;
  EdgeWeight coarse_min_degree = 0;
  NodeID coarse_min_degree_vertex = kInvalidNode;
};

struct PrRunResult {
  Graph graph;
  EdgeWeight lambda_hat = 0;
  std::vector<PrLevel> levels;
  int runs = 0;
};

/// Repeat PR runs (pass one + pass two + bulk contraction) while a run
/// contracts at least one edge and more than stop_vertex_count vertices
/// remain. Updates lambda_hat against the coarse min degree after every
/// contraction. threads > 1 evaluates conditions 1, 3 and 4 concurrently on
/// snapshot state (condition 2 stays sequential-only).
PrRunResult pr_run(Graph g, EdgeWeight lambda_hat, NodeID stop_vertex_count = 2, int threads = 1);

}  // namespace mincut
