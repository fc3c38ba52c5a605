#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mincut/generator.hpp"
#include "mincut/result_record.hpp"

namespace mincut::cli {

/// One benchmark instance: a graph file or a generator spec.
struct BenchInstance {
  std::string path;  // empty when generated
  std::optional<ClusteredErParams> generator;

  std::string id() const;
};

struct BenchPlan {
  std::vector<BenchInstance> instances;
  std::vector<std::string> algorithms;
  int repetitions = 5;
  std::vector<int> threads = {1};
  std::uint64_t seed = 0;
  std::string reference = "none";  // none | noi
  double epsilon = 0.1;
};

BenchPlan load_plan(const std::string& path);

/// Run the plan sequentially (rows never overlap; only the algorithm under
/// test is multi-threaded). Emits one JSON line per repetition to `rows` and
/// an aligned human summary to `summary`.
int run_bench(const BenchPlan& plan, std::ostream& rows, std::ostream& summary);

}  // namespace mincut::cli
