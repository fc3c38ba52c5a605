#pragma once

#include <string>

#include "mincut/graph.hpp"
#include "mincut/result_record.hpp"

namespace mincut::cli {

struct SolveSpec {
  std::string algorithm;  // viecut | noi | stoer-wagner | matula
  int threads = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  int repetition = 0;
};

bool is_known_algorithm(const std::string& name);

/// Run one algorithm on an already-constructed graph (timings exclude I/O by
/// construction). Fills the record's timing, phase and cut fields; the
/// bipartition is returned through out_cut when non-null.
ResultRecord run_solve(const Graph& g, const std::string& graph_id, const SolveSpec& spec,
                       CutResult* out_cut = nullptr);

}  // namespace mincut::cli
