#pragma once

#include <cstdint>
#include <vector>

#include "mincut/contraction.hpp"
#include "mincut/graph.hpp"
#include "mincut/label_propagation.hpp"
#include "mincut/result_record.hpp"

namespace mincut {

struct PipelineConfig {
  /// Kernel bound: the inexact contraction loop stops at <= n0 vertices and
  /// hands the kernel to the exact solver.
  NodeID n0 = 10000;
  LpaConfig lpa{};
  int threads = 1;
  std::uint64_t seed = 0;
  /// Output toggle only; the winning bipartition is tracked either way.
  bool emit_partition = true;
};

struct LevelTrace {
  NodeID n_before = 0;
  EdgeID m_before = 0;
  NodeID n_after_cluster = 0;
  NodeID n_after_pr = 0;
  EdgeID m_after_pr = 0;
  EdgeWeight lambda_hat = 0;
  double lpa_ms = 0;
  double fix_ms = 0;
  double contract_ms = 0;
  double pr_ms = 0;
};

struct PipelineTrace {
  std::vector<LevelTrace> levels;
  double solve_ms = 0;
  double total_ms = 0;

  PhaseTimes phase_totals() const;
};

struct PipelineResult {
  CutResult cut;
  PipelineTrace trace;
};

/// The multilevel heuristic: maintain the cut upper bound from the minimum
/// degree, repeat [label propagation -> correcting step -> cluster
/// contraction -> Padberg-Rinaldi runs] until at most cfg.n0 vertices
/// remain, solve the kernel exactly, and transfer the winning bipartition
/// back to the input vertices. An isolated vertex at any level ends the run
/// immediately with value 0. cfg.threads > 1 switches every phase except the
/// final exact solve to its shared-memory parallel variant, which is
/// intentionally nondeterministic; the result still satisfies value >=
/// lambda and value == capacity of the returned bipartition.
PipelineResult viecut(const Graph& g, const PipelineConfig& cfg);

/// Lift a side marker on the coarsest graph back to the original vertices,
/// walking the coarsening stack in reverse.
std::vector<bool> solution_transfer(const ContractionMap& map,
                                    const std::vector<bool>& kernel_side);

}  // namespace mincut
