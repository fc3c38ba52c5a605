#include "mincut/contraction.hpp"

#include <algorithm>
#include <cassert>

#include "mincut/parallel.hpp"

namespace mincut {

std::vector<bool> ContractionMap::lift_marker(const std::vector<bool>& coarse_side) const {
  std::vector<bool> current = coarse_side;
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const ContractionLevel& level = levels_[i];
    assert(current.size() == level.coarse_n);
    std::vector<bool> finer(level.map.size());
    for (std::size_t v = 0; v < level.map.size(); ++v) finer[v] = current[level.map[v]];
    current = std::move(finer);
  }
  return current;
}

std::pair<std::vector<NodeID>, NodeID> densify_labels(const std::vector<NodeID>& labels) {
  NodeID max_label = 0;
  for (NodeID l : labels) max_label = std::max(max_label, l);
  std::vector<NodeID> remap(static_cast<std::size_t>(max_label) + 1, kInvalidNode);
  std::vector<NodeID> dense(labels.size());
  NodeID next = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    NodeID& slot = remap[labels[v]];
    if (slot == kInvalidNode) slot = next++;
    dense[v] = slot;
  }
  return {std::move(dense), next};
}

namespace {

// Bucket vertices by dense label; members of each cluster stay in ascending
// vertex id order.
struct ClusterMembers {
  std::vector<EdgeID> offsets;  // k+1
  std::vector<NodeID> members;  // n
};

ClusterMembers bucket_by_cluster(const std::vector<NodeID>& dense, NodeID k) {
  ClusterMembers cm;
  cm.offsets.assign(static_cast<std::size_t>(k) + 1, 0);
  cm.members.resize(dense.size());
  for (NodeID label : dense) ++cm.offsets[label + 1];
  for (NodeID c = 0; c < k; ++c) cm.offsets[c + 1] += cm.offsets[c];
  std::vector<EdgeID> fill(cm.offsets.begin(), cm.offsets.end() - 1);
  for (std::size_t v = 0; v < dense.size(); ++v) cm.members[fill[dense[v]]++] = static_cast<NodeID>(v);
  return cm;
}

std::pair<Graph, ContractionLevel> contract_dense(const Graph& g, std::vector<NodeID> dense,
                                                  NodeID k) {
  ClusterMembers cm = bucket_by_cluster(dense, k);

  std::vector<EdgeID> offsets(static_cast<std::size_t>(k) + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  std::vector<EdgeWeight> acc(k, 0);
  std::vector<NodeID> stamp(k, kInvalidNode);
  std::vector<NodeID> encountered;
  for (NodeID c = 0; c < k; ++c) {
    encountered.clear();
    for (EdgeID i = cm.offsets[c]; i < cm.offsets[c + 1]; ++i) {
      const NodeID v = cm.members[i];
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        const NodeID cu = dense[g.target(e)];
        if (cu == c) continue;
        if (stamp[cu] != c) {
          stamp[cu] = c;
          acc[cu] = 0;
          encountered.push_back(cu);
        }
        acc[cu] += g.weight(e);
      }
    }
    std::sort(encountered.begin(), encountered.end());
    for (NodeID t : encountered) {
      targets.push_back(t);
      weights.push_back(acc[t]);
    }
    offsets[c + 1] = targets.size();
  }
  Graph coarse = Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
  return {std::move(coarse), ContractionLevel{std::move(dense), k}};
}

// One CSR row per cluster, built independently per thread.
std::pair<Graph, ContractionLevel> contract_cluster_level(const Graph& g,
                                                          std::vector<NodeID> dense, NodeID k,
                                                          int threads) {
  ClusterMembers cm = bucket_by_cluster(dense, k);

  std::vector<EdgeID> row_len(k, 0);
  std::vector<std::vector<std::pair<NodeID, EdgeWeight>>> rows(threads);
  std::vector<std::pair<NodeID, NodeID>> ranges(threads, {0, 0});

  parallel_chunks(0, k, threads, [&](int t, std::uint64_t c0, std::uint64_t c1) {
    ranges[t] = {static_cast<NodeID>(c0), static_cast<NodeID>(c1)};
    std::vector<EdgeWeight> acc(k, 0);
    std::vector<NodeID> stamp(k, kInvalidNode);
    std::vector<NodeID> encountered;
    auto& out = rows[t];
    for (NodeID c = static_cast<NodeID>(c0); c < c1; ++c) {
      encountered.clear();
      for (EdgeID i = cm.offsets[c]; i < cm.offsets[c + 1]; ++i) {
        const NodeID v = cm.members[i];
        for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
          const NodeID cu = dense[g.target(e)];
          if (cu == c) continue;
          if (stamp[cu] != c) {
            stamp[cu] = c;
            acc[cu] = 0;
            encountered.push_back(cu);
          }
          acc[cu] += g.weight(e);
        }
      }
      std::sort(encountered.begin(), encountered.end());
      row_len[c] = encountered.size();
      for (NodeID tgt : encountered) out.emplace_back(tgt, acc[tgt]);
    }
  });

  std::vector<EdgeID> offsets(static_cast<std::size_t>(k) + 1, 0);
  for (NodeID c = 0; c < k; ++c) offsets[c + 1] = offsets[c] + row_len[c];
  std::vector<NodeID> targets(offsets[k]);
  std::vector<EdgeWeight> weights(offsets[k]);
  parallel_chunks(0, threads, threads, [&](int, std::uint64_t t0, std::uint64_t t1) {
    for (std::uint64_t t = t0; t < t1; ++t) {
      EdgeID pos = ranges[t].first < k ? offsets[ranges[t].first] : offsets[k];
      for (const auto& [tgt, w] : rows[t]) {
        targets[pos] = tgt;
        weights[pos] = w;
        ++pos;
      }
    }
  });
  Graph coarse = Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
  return {std::move(coarse), ContractionLevel{std::move(dense), k}};
}

// Small cluster count: every thread accumulates a dense k*k matrix over its
// vertex range; one merge pass builds the coarse CSR.
std::pair<Graph, ContractionLevel> contract_thread_matrices(const Graph& g,
                                                            std::vector<NodeID> dense, NodeID k,
                                                            int threads) {
  const NodeID n = g.vertex_count();
  std::vector<std::vector<EdgeWeight>> mats(threads);
  parallel_chunks(0, n, threads, [&](int t, std::uint64_t v0, std::uint64_t v1) {
    auto& mat = mats[t];
    mat.assign(static_cast<std::size_t>(k) * k, 0);
    for (NodeID v = static_cast<NodeID>(v0); v < v1; ++v) {
      const NodeID cv = dense[v];
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        const NodeID cu = dense[g.target(e)];
        if (cu != cv) mat[static_cast<std::size_t>(cv) * k + cu] += g.weight(e);
      }
    }
  });
  std::vector<EdgeWeight>& total = mats[0];
  for (int t = 1; t < threads; ++t) {
    if (mats[t].empty()) continue;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += mats[t][i];
  }

  std::vector<EdgeID> offsets(static_cast<std::size_t>(k) + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  for (NodeID a = 0; a < k; ++a) {
    for (NodeID b = 0; b < k; ++b) {
      const EdgeWeight w = total[static_cast<std::size_t>(a) * k + b];
      if (w > 0) {
        targets.push_back(b);
        weights.push_back(w);
      }
    }
    offsets[a + 1] = targets.size();
  }
  Graph coarse = Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
  return {std::move(coarse), ContractionLevel{std::move(dense), k}};
}

}  // namespace

std::pair<Graph, ContractionLevel> contract_clustering(const Graph& g,
                                                       const std::vector<NodeID>& labels) {
  assert(labels.size() == g.vertex_count());
  auto [dense, k] = densify_labels(labels);
  return contract_dense(g, std::move(dense), k);
}

std::pair<Graph, ContractionLevel> contract_marked(const Graph& g, UnionFind& uf) {
  assert(uf.size() == g.vertex_count());
  std::vector<NodeID> roots(g.vertex_count());
  for (NodeID v = 0; v < g.vertex_count(); ++v) roots[v] = uf.find(v);
  return contract_clustering(g, roots);
}

std::pair<Graph, ContractionLevel> contract_clustering_parallel(
    const Graph& g, const std::vector<NodeID>& labels, int threads) {
  auto [dense, k] = densify_labels(labels);
  if (threads <= 1 || g.vertex_count() < 1024) {
    return contract_dense(g, std::move(dense), k);
  }
  const double c2 = static_cast<double>(k) * static_cast<double>(k);
  if (c2 > static_cast<double>(g.vertex_count())) {
    return contract_cluster_level(g, std::move(dense), k, threads);
  }
  return contract_thread_matrices(g, std::move(dense), k, threads);
}

}  // namespace mincut
