#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "mincut/metis_io.hpp"
#include "mincut/noi_mincut.hpp"
#include "solve_runner.hpp"

namespace mincut::cli {

std::string BenchInstance::id() const {
  if (!generator.has_value()) return path;
  std::ostringstream ss;
  ss << "cluster-er(n=" << generator->n << ",d=" << generator->density_percent
     << ",k=" << generator->clusters << ",seed=" << generator->seed << ")";
  return ss.str();
}

BenchPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plan file '" + path + "'");
  nlohmann::json j;
  in >> j;

  BenchPlan plan;
  plan.repetitions = j.value("repetitions", 5);
  plan.seed = j.value("seed", std::uint64_t{0});
  plan.reference = j.value("reference", std::string{"none"});
  plan.epsilon = j.value("epsilon", 0.1);
  if (j.contains("threads")) plan.threads = j.at("threads").get<std::vector<int>>();
  if (j.contains("algorithms")) plan.algorithms = j.at("algorithms").get<std::vector<std::string>>();
  for (const auto& inst : j.value("instances", nlohmann::json::array())) {
    BenchInstance bi;
    if (inst.contains("path")) {
      bi.path = inst.at("path").get<std::string>();
    } else if (inst.contains("generator")) {
      const auto& gen = inst.at("generator");
      const std::string type = gen.value("type", "cluster-er");
      if (type != "cluster-er") throw std::runtime_error("unknown generator type '" + type + "'");
      ClusteredErParams params;
      params.n = gen.at("n").get<NodeID>();
      params.density_percent = gen.at("d").get<double>();
      params.clusters = gen.value("k", NodeID{1});
      params.seed = gen.value("seed", std::uint64_t{0});
      bi.generator = params;
    } else {
      throw std::runtime_error("instance needs a 'path' or 'generator' entry");
    }
    plan.instances.push_back(std::move(bi));
  }
  if (plan.repetitions < 1) throw std::runtime_error("repetitions must be >= 1");
  for (const std::string& algo : plan.algorithms) {
    if (!is_known_algorithm(algo)) throw std::runtime_error("unknown algorithm '" + algo + "'");
  }
  if (plan.reference != "none" && plan.reference != "noi") {
    throw std::runtime_error("reference must be 'none' or 'noi'");
  }
  return plan;
}

namespace {

struct GroupStats {
  double mean_ms = 0;
  double mean_ns_per_edge = 0;
  double optimal_fraction = -1;  // -1: no reference
  EdgeWeight cut = 0;
  std::optional<double> speedup;
  std::string error;
};

void print_summary(const BenchPlan& plan,
                   const std::vector<std::tuple<std::string, std::string, int, GroupStats>>& groups,
                   std::ostream& out) {
  out << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%-44s %-14s %7s %12s %10s %9s %8s\n", "instance", "algorithm",
                "threads", "mean ms", "ns/edge", "speedup", "opt%");
  out << line;
  for (const auto& [graph, algo, threads, s] : groups) {
    if (!s.error.empty()) {
      std::snprintf(line, sizeof line, "%-44s %-14s %7d   FAILED: %s\n", graph.c_str(),
                    algo.c_str(), threads, s.error.c_str());
      out << line;
      continue;
    }
    std::string speedup = s.speedup.has_value() ? [&] {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2fx", *s.speedup);
      return std::string(buf);
    }() : std::string("-");
    std::string opt = s.optimal_fraction < 0 ? "-" : [&] {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.0f%%", 100.0 * s.optimal_fraction);
      return std::string(buf);
    }();
    std::snprintf(line, sizeof line, "%-44s %-14s %7d %12.3f %10.2f %9s %8s\n", graph.c_str(),
                  algo.c_str(), threads, s.mean_ms, s.mean_ns_per_edge, speedup.c_str(),
                  opt.c_str());
    out << line;
  }
  (void)plan;
}

}  // namespace

int run_bench(const BenchPlan& plan, std::ostream& rows, std::ostream& summary) {
  std::vector<std::tuple<std::string, std::string, int, GroupStats>> groups;

  for (const BenchInstance& instance : plan.instances) {
    const std::string graph_id = instance.id();
    Graph graph;
    std::string load_error;
    try {
      graph = instance.generator.has_value() ? generate_clustered_er(*instance.generator)
                                             : read_metis_file(instance.path);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    if (!load_error.empty()) {
      // missing or broken instance: one failed row, the run continues
      ResultRecord record;
      record.graph = graph_id;
      record.error = load_error;
      rows << to_json_line(record) << '\n';
      GroupStats stats;
      stats.error = load_error;
      groups.emplace_back(graph_id, "-", 0, stats);
      continue;
    }

    std::optional<EdgeWeight> reference;
    if (plan.reference == "noi") reference = noi_mincut(graph).value;

    std::map<std::string, double> one_thread_mean;  // algorithm -> mean ms at threads=1
    for (const std::string& algo : plan.algorithms) {
      for (int threads : plan.threads) {
        std::vector<ResultRecord> reps;
        for (int rep = 0; rep < plan.repetitions; ++rep) {
          SolveSpec spec;
          spec.algorithm = algo;
          spec.threads = threads;
          spec.seed = plan.seed + static_cast<std::uint64_t>(rep);
          spec.epsilon = plan.epsilon;
          spec.repetition = rep;
          ResultRecord record = run_solve(graph, graph_id, spec);
          if (reference.has_value()) {
            record.optimal = record.cut == *reference;
            record.relative_error =
                *reference == 0
                    ? 0.0
                    : (static_cast<double>(record.cut) - static_cast<double>(*reference)) /
                          static_cast<double>(*reference);
          }
          reps.push_back(std::move(record));
        }
        GroupStats stats;
        stats.cut = reps.front().cut;
        for (const ResultRecord& r : reps) {
          stats.mean_ms += r.total_ms;
          stats.mean_ns_per_edge += r.ns_per_edge;
        }
        stats.mean_ms /= plan.repetitions;
        stats.mean_ns_per_edge /= plan.repetitions;
        if (reference.has_value()) {
          int optimal = 0;
          for (const ResultRecord& r : reps) optimal += r.optimal.value_or(false) ? 1 : 0;
          stats.optimal_fraction = static_cast<double>(optimal) / plan.repetitions;
        }
        if (threads == 1) {
          one_thread_mean[algo] = stats.mean_ms;
        } else if (auto it = one_thread_mean.find(algo); it != one_thread_mean.end()) {
          if (stats.mean_ms > 0) stats.speedup = it->second / stats.mean_ms;
        }
        for (ResultRecord& r : reps) {
          r.speedup = stats.speedup;
          rows << to_json_line(r) << '\n';
        }
        groups.emplace_back(graph_id, algo, threads, stats);
      }
    }
  }
  print_summary(plan, groups, summary);
  return 0;
}

}  // namespace mincut::cli
