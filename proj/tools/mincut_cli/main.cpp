#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "bench.hpp"
#include "mincut/generator.hpp"
#include "mincut/kcore.hpp"
#include "mincut/metis_io.hpp"
#include "solve_runner.hpp"

namespace {

using namespace mincut;
using namespace mincut::cli;

constexpr int kExitFormatError = 2;
constexpr int kExitPreconditionError = 3;

int default_threads() {
  if (const char* env = std::getenv("MINCUT_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

void write_partition(const CutResult& cut, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (std::size_t v = 0; v < cut.side.size(); ++v) {
    if (cut.side[v]) out << v << '\n';
  }
}

struct SolveArgs {
  std::string graph_path;
  std::string algorithm = "viecut";
  int threads = default_threads();
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  std::string partition_out;
  bool json_only = false;
};

int cmd_solve(const SolveArgs& args) {
  const Graph graph = read_metis_file(args.graph_path);
  SolveSpec spec;
  spec.algorithm = args.algorithm;
  spec.threads = args.threads;
  spec.seed = args.seed;
  spec.epsilon = args.epsilon;
  CutResult cut;
  ResultRecord record = run_solve(graph, args.graph_path, spec, &cut);
  if (!args.partition_out.empty()) {
    write_partition(cut, args.partition_out);
    record.partition_file = args.partition_out;
  }
  std::cout << to_json_line(record) << '\n';
  if (!args.json_only) {
    std::cerr << args.algorithm << " on " << args.graph_path << ": cut " << record.cut << " in "
              << record.total_ms << " ms\n";
  }
  return 0;
}

struct GenerateArgs {
  NodeID n = 0;
  double d = 0;
  NodeID k = 1;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_generate_cluster_er(const GenerateArgs& args) {
  ClusteredErParams params;
  params.n = args.n;
  params.density_percent = args.d;
  params.clusters = args.k;
  params.seed = args.seed;
  const Graph graph = generate_clustered_er(params);
  write_metis_file(graph, args.out_path);
  std::cerr << "wrote n=" << graph.vertex_count() << " m=" << graph.edge_count() << " to "
            << args.out_path << '\n';
  return 0;
}

struct KcoreArgs {
  std::string input_path;
  NodeID k = 1;
  std::string out_path;
};

int cmd_kcore(const KcoreArgs& args) {
  const Graph graph = read_metis_file(args.input_path);
  const Subgraph core = kcore(graph, args.k);
  if (core.graph.vertex_count() == 0) {
    std::cout << "k-core is empty for k=" << args.k << "; no output written\n";
    return 0;
  }
  const Subgraph component = largest_component(core.graph);
  write_metis_file(component.graph, args.out_path);
  // sidecar: line i holds the original id of output vertex i
  const std::string map_path = args.out_path + ".map";
  std::ofstream map_out(map_path);
  if (!map_out) throw std::runtime_error("cannot open '" + map_path + "' for writing");
  for (NodeID v : component.original_ids) map_out << core.original_ids[v] << '\n';
  std::cerr << "wrote n=" << component.graph.vertex_count()
            << " m=" << component.graph.edge_count() << " to " << args.out_path << " (ids in "
            << map_path << ")\n";
  return 0;
}

struct BenchArgs {
  std::string plan_path;
  std::vector<std::string> graphs;
  std::vector<std::string> algorithms;
  int repetitions = 5;
  std::vector<int> threads;
  std::uint64_t seed = 0;
  std::string reference = "none";
  double epsilon = 0.1;
  std::string out_path;
};

int cmd_bench(const BenchArgs& args) {
  BenchPlan plan;
  if (!args.plan_path.empty()) {
    plan = load_plan(args.plan_path);
  } else {
    for (const std::string& path : args.graphs) {
      BenchInstance instance;
      instance.path = path;
      plan.instances.push_back(std::move(instance));
    }
    plan.algorithms = args.algorithms;
    plan.repetitions = args.repetitions;
    if (!args.threads.empty()) plan.threads = args.threads;
    plan.seed = args.seed;
    plan.reference = args.reference;
    plan.epsilon = args.epsilon;
    for (const std::string& algo : plan.algorithms) {
      if (!is_known_algorithm(algo)) throw std::runtime_error("unknown algorithm '" + algo + "'");
    }
    if (plan.reference != "none" && plan.reference != "noi") {
      throw std::runtime_error("reference must be 'none' or 'noi'");
    }
  }
  if (plan.instances.empty()) throw std::runtime_error("bench plan has no instances");
  if (plan.algorithms.empty()) throw std::runtime_error("bench plan has no algorithms");

  if (!args.out_path.empty()) {
    std::ofstream rows(args.out_path);
    if (!rows) throw std::runtime_error("cannot open '" + args.out_path + "' for writing");
    return run_bench(plan, rows, std::cout);
  }
  return run_bench(plan, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum cut toolkit: multilevel heuristic, exact solvers, generators, benchmarks"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "compute a minimum cut of a METIS graph");
  solve->add_option("--graph", solve_args.graph_path, "input graph (METIS, .gz accepted)")
      ->required();
  solve->add_option("--algorithm", solve_args.algorithm, "viecut | noi | stoer-wagner | matula")
      ->check(CLI::IsMember({"viecut", "noi", "stoer-wagner", "matula"}));
  solve->add_option("--threads", solve_args.threads, "worker threads (viecut only)");
  solve->add_option("--seed", solve_args.seed, "random seed");
  solve->add_option("--epsilon", solve_args.epsilon, "matula approximation parameter");
  solve->add_option("--partition-out", solve_args.partition_out,
                    "write side-A vertex ids (0-indexed, one per line)");
  solve->add_flag("--json", solve_args.json_only, "JSON output only");

  GenerateArgs gen_args;
  CLI::App* generate = app.add_subcommand("generate", "generate benchmark graphs");
  CLI::App* cluster_er =
      generate->add_subcommand("cluster-er", "clustered Erdos-Renyi graph (METIS output)");
  cluster_er->add_option("--n", gen_args.n, "vertex count")->required();
  cluster_er->add_option("--d", gen_args.d, "density percent, m = n(n-1)/2 * d/100")->required();
  cluster_er->add_option("--k", gen_args.k, "cluster count")->required();
  cluster_er->add_option("--seed", gen_args.seed, "random seed");
  cluster_er->add_option("--out", gen_args.out_path, "output path")->required();
  generate->require_subcommand(1);

  KcoreArgs kcore_args;
  CLI::App* kcore_cmd =
      app.add_subcommand("kcore", "largest connected component of the k-core");
  kcore_cmd->add_option("--input", kcore_args.input_path, "input graph")->required();
  kcore_cmd->add_option("--k", kcore_args.k, "minimum degree")->required();
  kcore_cmd->add_option("--out", kcore_args.out_path, "output path")->required();

  BenchArgs bench_args;
  bench_args.threads.clear();
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark plan");
  bench->add_option("--plan", bench_args.plan_path, "JSON plan file (overrides other flags)");
  bench->add_option("--graph", bench_args.graphs, "instance path (repeatable)");
  bench->add_option("--algorithm", bench_args.algorithms, "algorithm (repeatable)");
  bench->add_option("--reps", bench_args.repetitions, "repetitions per row");
  bench->add_option("--threads", bench_args.threads, "thread count (repeatable)");
  bench->add_option("--seed", bench_args.seed, "base seed; repetition r uses seed+r");
  bench->add_option("--reference", bench_args.reference,
                    "exact reference for optimality columns: none | noi");
  bench->add_option("--epsilon", bench_args.epsilon, "matula approximation parameter");
  bench->add_option("--out", bench_args.out_path, "write JSON rows to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFormatError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (generate->parsed()) return cmd_generate_cluster_er(gen_args);
    if (kcore_cmd->parsed()) return cmd_kcore(kcore_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const GraphFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormatError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    // generator parameter errors are format errors from the CLI's view
    return generate->parsed() ? kExitFormatError : kExitPreconditionError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormatError;
  }
  return 0;
}
