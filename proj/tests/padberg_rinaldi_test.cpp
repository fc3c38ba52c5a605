#include <doctest.h>

#include "mincut/brute_force.hpp"
#include "mincut/noi_mincut.hpp"
#include "mincut/padberg_rinaldi.hpp"
#include "test_util.hpp"

using namespace mincut;
using namespace mincut::testutil;

namespace {

// Value of an exhaustive PR reduction: the carried bound, improved by the
// exact minimum cut of whatever graph is left.
EdgeWeight pr_reduced_value(const Graph& g, EdgeWeight lambda_hat, int threads = 1) {
  const PrRunResult result = pr_run(g, lambda_hat, 2, threads);
  if (result.graph.vertex_count() < 2) return result.lambda_hat;
  return std::min(result.lambda_hat, brute_force_mincut(result.graph).value);
}

}  // namespace

TEST_SUITE_BEGIN("pr");

TEST_CASE("condition 1 marks heavy edges unless pendant") {
  // triangle with a weight-3 edge; lambda_hat = 3
  const Graph g = make_graph(3, {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}});
  PrState state(g, 3);
  pr_pass_12(g, state);
  CHECK(state.uf.same_set(0, 1));

  // pendant edge of weight >= lambda_hat stays untouched
  const Graph pending = make_graph(3, {{0, 1, 5}, {1, 2, 1}});
  PrState st2(pending, 1);
  pr_pass_12(pending, st2);
  CHECK(st2.uf.set_count() == 3);
}

TEST_CASE("condition 2 uses merged supervertex degrees") {
  // c(0) = 10 <= 2*6: the weight-6 edge is marked
  const Graph g = make_graph(4, {{0, 1, 6}, {0, 2, 4}, {1, 3, 9}, {2, 3, 9}});
  PrState state(g, 100);
  pr_pass_12(g, state);
  CHECK(state.uf.same_set(0, 1));
}

TEST_CASE("condition 3 marks inside a triangle") {
  // c(v,w)=2, c(v,u)=3, c(w,u)=3, degrees 5,5: 5 <= 2*(2+3)
  const Graph g = make_graph(3, {{0, 1, 2}, {0, 2, 3}, {1, 2, 3}});
  PrState state(g, kInfiniteWeight);  // keep conditions 1/4 quiet
  pr_pass_34(g, state);
  CHECK(state.uf.same_set(0, 1));
  CHECK(pr_reduced_value(g, min_degree_vertex(g).second) == brute_force_mincut(g).value);
}

TEST_CASE("condition 4 sums common-neighborhood minima") {
  // edge (0,1) weight 2; common neighbors contribute min(1,5) + min(7,2) = 3;
  // heavy pendants inflate the degrees so condition 3 stays quiet
  const Graph g = make_graph(6, {{0, 1, 2},
                                 {0, 2, 1},
                                 {1, 2, 5},
                                 {0, 3, 7},
                                 {1, 3, 2},
                                 {0, 4, 20},
                                 {1, 5, 20}});
  PrState state(g, 4);
  pr_pass_34(g, state);
  CHECK(state.uf.same_set(0, 1));
}

TEST_CASE("scanned vertices are skipped in pass two") {
  // path a-v-w plus triangles; once (0,1) is examined, (1,2) is not
  const Graph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  PrState state(g, kInfiniteWeight);
  pr_pass_34(g, state);
  // C4 has empty common neighborhoods: nothing marked, everyone scanned in pairs
  CHECK(state.uf.set_count() == 4);
  CHECK(state.scanned == std::vector<std::uint8_t>{1, 1, 1, 1});
}

TEST_CASE("pr_run contracts a unit triangle at lambda_hat = 2") {
  const Graph g = complete(3);
  const PrRunResult result = pr_run(g, 2);
  CHECK(result.graph.vertex_count() <= 2);
  CHECK(result.lambda_hat == 2);
}

TEST_CASE("pr_run leaves K3,3 untouched") {
  const Graph g = k33();
  const PrRunResult result = pr_run(g, 3);
  CHECK(result.runs == 0);
  CHECK(result.graph == g);
  CHECK(result.levels.empty());
}

TEST_CASE("exhaustive pr_run preserves lambda on random graphs") {
  Rng rng(61);
  for (int iter = 0; iter < 500; ++iter) {
    const NodeID n = static_cast<NodeID>(rng.uniform(3, 12));
    const Graph g = random_connected_graph(rng, n, 0.3, 1, 10);
    const EdgeWeight lambda = brute_force_mincut(g).value;
    CHECK(pr_reduced_value(g, min_degree_vertex(g).second) == lambda);
  }
}

TEST_CASE("lambda_hat never increases and stays above lambda") {
  Rng rng(62);
  for (int iter = 0; iter < 200; ++iter) {
    const NodeID n = static_cast<NodeID>(rng.uniform(3, 12));
    const Graph g = random_connected_graph(rng, n, 0.35, 1, 10);
    const EdgeWeight initial = min_degree_vertex(g).second;
    const PrRunResult result = pr_run(g, initial);
    CHECK(result.lambda_hat <= initial);
    CHECK(result.lambda_hat >= brute_force_mincut(g).value);
    EdgeWeight previous = initial;
    for (const PrLevel& level : result.levels) {
      if (level.level.coarse_n < 2) continue;
      CHECK(std::min(previous, level.coarse_min_degree) <= previous);
      previous = std::min(previous, level.coarse_min_degree);
    }
    CHECK(previous == result.lambda_hat);
  }
}

TEST_CASE("pass two touches each adjacency entry at most twice") {
  Rng rng(63);
  for (int iter = 0; iter < 50; ++iter) {
    const NodeID n = static_cast<NodeID>(rng.uniform(4, 60));
    const Graph g = random_connected_graph(rng, n, 0.2, 1, 10);
    PrState state(g, min_degree_vertex(g).second);
    pr_pass_34(g, state);
    CHECK(state.touched <= g.entry_count());
  }
}

TEST_CASE("parallel pr_run matches the exactness contract") {
  Rng rng(64);
  for (int iter = 0; iter < 200; ++iter) {
    const NodeID n = static_cast<NodeID>(rng.uniform(3, 12));
    const Graph g = random_connected_graph(rng, n, 0.3, 1, 10);
    const EdgeWeight lambda = brute_force_mincut(g).value;
    CHECK(pr_reduced_value(g, min_degree_vertex(g).second, 4) == lambda);
  }
}

TEST_SUITE_END();
