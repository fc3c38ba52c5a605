#pragma once

#include <optional>
#include <span>
#include <string>

#include "mincut/types.hpp"

namespace mincut {

/// Wall time per pipeline phase, in milliseconds. All zero for single-phase
/// solvers except solve_ms.
struct PhaseTimes {
  double label_propagation_ms = 0;
  double fix_misplaced_ms = 0;
  double contraction_ms = 0;
  double pr_ms = 0;
  double solve_ms = 0;
};

/// One benchmark/solve row. The JSON field set is identical for every
/// algorithm so rows stay schema-stable.
struct ResultRecord {
  std::string algorithm;
  std::string graph;
  std::uint64_t seed = 0;
  int threads = 1;
  int repetition = 0;
  NodeID n = 0;
  EdgeID m = 0;
  EdgeWeight cut = 0;
  bool degenerate = false;
  double total_ms = 0;
  PhaseTimes phases;
  double ns_per_edge = 0;  // total_ms scaled by m (undirected edge count)
  std::optional<bool> optimal;
  std::optional<double> relative_error;
  std::optional<double> speedup;
  std::string partition_file;  // empty when no partition was written
  std::string error;           // non-empty marks a failed row
};

/// Serialize one record as a single JSON object (no trailing newline), with
/// a fixed field order.
std::string to_json_line(const ResultRecord& record);

/// One JSON object per line, deterministic field order.
void emit_results(std::span<const ResultRecord> records, std::ostream& out);

}  // namespace mincut
