#include "solve_runner.hpp"

#include "mincut/matula.hpp"
#include "mincut/noi_mincut.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/stoer_wagner.hpp"
#include "mincut/timer.hpp"

namespace mincut::cli {

bool is_known_algorithm(const std::string& name) {
  return name == "viecut" || name == "noi" || name == "stoer-wagner" || name == "matula";
}

ResultRecord run_solve(const Graph& g, const std::string& graph_id, const SolveSpec& spec,
                       CutResult* out_cut) {
  ResultRecord record;
  record.algorithm = spec.algorithm;
  record.graph = graph_id;
  record.seed = spec.seed;
  record.threads = spec.threads;
  record.repetition = spec.repetition;
  record.n = g.vertex_count();
  record.m = g.edge_count();

  CutResult cut;
  Stopwatch clock;
  if (spec.algorithm == "viecut") {
    PipelineConfig cfg;
    cfg.threads = spec.threads;
    cfg.seed = spec.seed;
    PipelineResult result = viecut(g, cfg);
    record.total_ms = clock.lap();
    record.phases = result.trace.phase_totals();
    cut = std::move(result.cut);
  } else {
    if (spec.algorithm == "noi") {
      cut = noi_mincut(g);
    } else if (spec.algorithm == "stoer-wagner") {
      cut = stoer_wagner(g);
    } else if (spec.algorithm == "matula") {
      cut = matula_approx(g, spec.epsilon);
    } else {
      throw PreconditionError("unknown algorithm '" + spec.algorithm + "'");
    }
    record.total_ms = clock.lap();
    record.phases.solve_ms = record.total_ms;
  }
  record.cut = cut.value;
  record.degenerate = cut.degenerate;
  // ns/edge normalizes by the undirected edge count m
  record.ns_per_edge = record.m == 0 ? 0 : record.total_ms * 1e6 / static_cast<double>(record.m);
  if (out_cut != nullptr) *out_cut = std::move(cut);
  return record;
}

}  // namespace mincut::cli
