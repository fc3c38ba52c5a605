#include <benchmark/benchmark.h>

#include "mincut/generator.hpp"
#include "mincut/matula.hpp"
#include "mincut/noi_mincut.hpp"
#include "mincut/padberg_rinaldi.hpp"
#include "mincut/pipeline.hpp"

using namespace mincut;

namespace {

Graph bench_graph(NodeID n, double avg_degree) {
  return generate_clustered_er({n, 100.0 * avg_degree / (static_cast<double>(n) - 1), 2, 11});
}

void BM_Capforest(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeID>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(capforest(g, 0));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Capforest)->Arg(10000)->Arg(100000);

void BM_NoiMincut(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeID>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noi_mincut(g));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_NoiMincut)->Arg(10000)->Arg(50000);

void BM_Matula(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeID>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matula_approx(g, 0.1));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Matula)->Arg(10000)->Arg(50000);

void BM_PrRun(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeID>(state.range(0)), 20);
  const EdgeWeight lambda_hat = min_degree_vertex(g).second;
  for (auto _ : state) {
    Graph copy = g;
    benchmark::DoNotOptimize(pr_run(std::move(copy), lambda_hat));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_PrRun)->Arg(10000)->Arg(100000);

void BM_VieCut(benchmark::State& state) {
  const Graph g = bench_graph(100000, 20);
  PipelineConfig cfg;
  cfg.n0 = 10000;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(viecut(g, cfg));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_VieCut)->Arg(1)->Arg(2)->Arg(4);

}  // namespace
