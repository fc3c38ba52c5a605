#include <benchmark/benchmark.h>

#include "mincut/contraction.hpp"
#include "mincut/generator.hpp"
#include "mincut/metis_io.hpp"

using namespace mincut;

namespace {

Graph bench_graph(NodeID n) {
  const double d = 2000.0 / (static_cast<double>(n) - 1);  // average degree ~20
  return generate_clustered_er({n, d, 2, 7});
}

void BM_GenerateClusterEr(benchmark::State& state) {
  const NodeID n = static_cast<NodeID>(state.range(0));
  const double d = 2000.0 / (static_cast<double>(n) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_clustered_er({n, d, 2, 7}));
  }
  state.SetItemsProcessed(state.iterations() * clustered_er_edge_count(n, d));
}
BENCHMARK(BM_GenerateClusterEr)->Arg(10000)->Arg(100000);

void BM_ContractClustering(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeID>(state.range(0)));
  std::vector<NodeID> labels(g.vertex_count());
  for (NodeID v = 0; v < g.vertex_count(); ++v) labels[v] = v % 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract_clustering(g, labels));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_ContractClustering)->Arg(10000)->Arg(100000);

void BM_ContractClusteringParallel(benchmark::State& state) {
  const Graph g = bench_graph(100000);
  std::vector<NodeID> labels(g.vertex_count());
  for (NodeID v = 0; v < g.vertex_count(); ++v) labels[v] = v % 64;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract_clustering_parallel(g, labels, threads));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_ContractClusteringParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_WriteParseMetis(benchmark::State& state) {
  const Graph g = bench_graph(10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_metis(write_metis(g)));
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_WriteParseMetis);

}  // namespace
