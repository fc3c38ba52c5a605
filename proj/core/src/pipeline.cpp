#include "mincut/pipeline.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

#include "mincut/noi_mincut.hpp"
#include "mincut/padberg_rinaldi.hpp"
#include "mincut/random.hpp"
#include "mincut/timer.hpp"

namespace mincut {

PhaseTimes PipelineTrace::phase_totals() const {
  PhaseTimes t;
  for (const LevelTrace& l : levels) {
    t.label_propagation_ms += l.lpa_ms;
    t.fix_misplaced_ms += l.fix_ms;
    t.contraction_ms += l.contract_ms;
    t.pr_ms += l.pr_ms;
  }
  t.solve_ms = solve_ms;
  return t;
}

std::vector<bool> solution_transfer(const ContractionMap& map,
                                    const std::vector<bool>& kernel_side) {
  return map.lift_marker(kernel_side);
}

namespace {

struct Candidate {
  EdgeWeight value = kInfiniteWeight;
  std::vector<bool> side;
};

}  // namespace

PipelineResult viecut(const Graph& g, const PipelineConfig& cfg) {
  if (cfg.n0 < 2) throw PreconditionError("pipeline requires n0 >= 2");
  Stopwatch total;
  PipelineResult out;
  const NodeID n = g.vertex_count();
  if (n == 0) {
    out.cut = {0, {}, true};
    return out;
  }
  if (n == 1) {
    out.cut = {0, {true}, true};
    return out;
  }

  // lambda_hat always carries a witness partition on the original vertices
  std::vector<NodeID> to_current(n);
  std::iota(to_current.begin(), to_current.end(), NodeID{0});
  ContractionMap map;

  Candidate best;
  auto record_trivial_cut = [&](NodeID coarse_vertex, EdgeWeight degree) {
    best.value = degree;
    best.side.assign(n, false);
    for (NodeID v = 0; v < n; ++v) best.side[v] = to_current[v] == coarse_vertex;
  };

  {
    const auto [v0, d0] = min_degree_vertex(g);
    record_trivial_cut(v0, d0);
    if (d0 == 0) {  // isolated vertex: minimum cut is certainly 0
      out.cut = {0, std::move(best.side), false};
      out.trace.total_ms = total.elapsed_ms();
      return out;
    }
  }

  Graph work;
  const Graph* current = &g;
  bool guard = cfg.lpa.singleton_guard;
  std::size_t level_index = 0;

  while (current->vertex_count() > cfg.n0) {
    LevelTrace lt;
    lt.n_before = current->vertex_count();
    lt.m_before = current->edge_count();

    Graph coarse;
    ContractionLevel cluster_level;
    for (int attempt = 0;; ++attempt) {
      LpaConfig lpa = cfg.lpa;
      lpa.threads = cfg.threads;
      lpa.singleton_guard = guard;
      lpa.seed = Rng::mix(cfg.seed, (level_index << 8) + static_cast<std::uint64_t>(attempt));
      // a single guarded round always halves a connected graph
      if (attempt >= 2) lpa.iterations = 1;

      Stopwatch phase;
      Clustering clustering = label_propagation(*current, lpa);
      lt.lpa_ms += phase.lap();
      clustering = fix_misplaced(*current, std::move(clustering), cfg.threads);
      lt.fix_ms += phase.lap();
      std::tie(coarse, cluster_level) =
          cfg.threads > 1 ? contract_clustering_parallel(*current, clustering.labels, cfg.threads)
                          : contract_clustering(*current, clustering.labels);
      lt.contract_ms += phase.lap();
      if (coarse.vertex_count() < current->vertex_count()) break;
      if (attempt >= 3) throw std::logic_error("pipeline level failed to shrink");
      guard = true;
    }
    lt.n_after_cluster = coarse.vertex_count();
    // enable the guard for the next level when this round shrank by < 2x
    guard = guard || 2 * static_cast<std::uint64_t>(lt.n_after_cluster) > lt.n_before;

    for (NodeID v = 0; v < n; ++v) to_current[v] = cluster_level.map[to_current[v]];
    map.push(std::move(cluster_level));
    if (coarse.vertex_count() < 2) {  // fully collapsed, nothing left to solve
      work = std::move(coarse);
      current = &work;
      lt.n_after_pr = work.vertex_count();
      lt.lambda_hat = best.value;
      out.trace.levels.push_back(lt);
      break;
    }
    {
      const auto [vmin, dmin] = min_degree_vertex(coarse);
      if (dmin < best.value) record_trivial_cut(vmin, dmin);
      if (dmin == 0) {
        out.cut = {0, std::move(best.side), false};
        out.trace.levels.push_back(lt);
        out.trace.total_ms = total.elapsed_ms();
        return out;
      }
    }

    Stopwatch pr_phase;
    PrRunResult pr = pr_run(std::move(coarse), best.value, cfg.n0, cfg.threads);
    lt.pr_ms = pr_phase.lap();
    for (PrLevel& level : pr.levels) {
      for (NodeID v = 0; v < n; ++v) to_current[v] = level.level.map[to_current[v]];
      const NodeID coarse_n = level.level.coarse_n;
      map.push(std::move(level.level));
      if (coarse_n < 2) continue;
      if (level.coarse_min_degree < best.value) {
        record_trivial_cut(level.coarse_min_degree_vertex, level.coarse_min_degree);
      }
      if (level.coarse_min_degree == 0) {
        out.cut = {0, std::move(best.side), false};
        out.trace.levels.push_back(lt);
        out.trace.total_ms = total.elapsed_ms();
        return out;
      }
    }

    work = std::move(pr.graph);
    current = &work;
    lt.n_after_pr = work.vertex_count();
    lt.m_after_pr = work.edge_count();
    lt.lambda_hat = best.value;
    out.trace.levels.push_back(lt);
    ++level_index;
  }

  if (current->vertex_count() >= 2) {
    Stopwatch solve;
    const CutResult kernel = noi_mincut(*current);  // single-threaded by design
    out.trace.solve_ms = solve.lap();
    if (kernel.value < best.value) {
      best.value = kernel.value;
      best.side = solution_transfer(map, kernel.side);
    }
  }

  out.cut = {best.value, std::move(best.side), false};
  out.trace.total_ms = total.elapsed_ms();
  return out;
}

}  // namespace mincut
