#include "mincut/label_propagation.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <unordered_set>

#include "mincut/contraction.hpp"
#include "mincut/parallel.hpp"
#include "mincut/random.hpp"

namespace mincut {

NodeID Clustering::cluster_count() const {
  return densify_labels(labels).second;
}

std::vector<NodeID> block_shuffled_order(NodeID n, NodeID block_size, std::uint64_t seed) {
  assert(n >= 1 && block_size >= 1);
  std::vector<NodeID> order(n);
  for (NodeID v = 0; v < n; ++v) order[v] = v;
  Rng rng(seed);
  for (NodeID begin = 0; begin < n; begin += block_size) {
    const NodeID end = std::min<NodeID>(begin + block_size, n);
    rng.shuffle(std::span<NodeID>(order.data() + begin, order.data() + end));
  }
  return order;
}

namespace {

// Per-thread scoring scratch: label -> accumulated weight, reset lazily via
// a stamp so a round stays O(n + m).
struct ScoreBuffer {
  std::vector<EdgeWeight> score;
  std::vector<NodeID> stamp;
  std::vector<NodeID> seen;
  NodeID current = kInvalidNode;

  explicit ScoreBuffer(NodeID n) : score(n, 0), stamp(n, kInvalidNode) {}

  void start(NodeID v) {
    current = v;
    seen.clear();
  }

  void add(NodeID label, EdgeWeight w) {
    if (stamp[label] != current) {
      stamp[label] = current;
      score[label] = 0;
      seen.push_back(label);
    }
    score[label] += w;
  }
};

template <bool Atomic>
NodeID load_label(const std::vector<NodeID>& labels, NodeID v) {
  if constexpr (Atomic) {
    return std::atomic_ref<const NodeID>(labels[v]).load(std::memory_order_relaxed);
  } else {
    return labels[v];
  }
}

template <bool Atomic>
void store_label(std::vector<NodeID>& labels, NodeID v, NodeID value) {
  if constexpr (Atomic) {
    std::atomic_ref<NodeID>(labels[v]).store(value, std::memory_order_relaxed);
  } else {
    labels[v] = value;
  }
}

// Process one vertex: score neighbor labels, pick a maximizer uniformly at
// random, honor the first-round singleton guard.
template <bool Atomic>
void update_vertex(const Graph& g, std::vector<NodeID>& labels, NodeID v, ScoreBuffer& buf,
                   Rng& rng, std::vector<std::uint8_t>* occupied) {
  if (occupied != nullptr && (*occupied)[v] != 0) return;  // guarded: keep own label
  if (g.unweighted_degree(v) == 0) return;                 // isolated: keeps its label

  buf.start(v);
  for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
    buf.add(load_label<Atomic>(labels, g.target(e)), g.weight(e));
  }
  EdgeWeight best = 0;
  NodeID chosen = kInvalidNode;
  std::uint64_t ties = 0;
  for (NodeID label : buf.seen) {
    const EdgeWeight s = buf.score[label];
    if (s > best || chosen == kInvalidNode) {
      best = s;
      chosen = label;
      ties = 1;
    } else if (s == best) {
      ++ties;
      if (rng.bounded(ties) == 0) chosen = label;
    }
  }
  const NodeID old = load_label<Atomic>(labels, v);
  if (chosen != old) {
    store_label<Atomic>(labels, v, chosen);
    if (occupied != nullptr) (*occupied)[chosen] = 1;
  }
}

}  // namespace

Clustering label_propagation(const Graph& g, const LpaConfig& cfg) {
  assert(cfg.iterations >= 1 && cfg.shuffle_block_size >= 1);
  const NodeID n = g.vertex_count();
  Clustering clustering;
  clustering.labels.resize(n);
  for (NodeID v = 0; v < n; ++v) clustering.labels[v] = v;
  if (n == 0) return clustering;

  std::vector<std::uint8_t> occupied;
  for (int round = 0; round < cfg.iterations; ++round) {
    const std::uint64_t round_seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(round));
    std::vector<NodeID> order = block_shuffled_order(n, cfg.shuffle_block_size, round_seed);
    const bool guard = cfg.singleton_guard && round == 0;
    if (guard) occupied.assign(n, 0);
    std::vector<std::uint8_t>* occ = guard ? &occupied : nullptr;

    if (cfg.threads <= 1) {
      ScoreBuffer buf(n);
      Rng rng(Rng::mix(round_seed, 0x7265736572766f69ULL));
      for (NodeID v : order) {
        update_vertex<false>(g, clustering.labels, v, buf, rng, occ);
      }
    } else {
      // racy shared-label mode: relaxed word-sized accesses, lost updates
      // are acceptable and act as extra randomness
      parallel_chunks(0, n, cfg.threads, [&](int t, std::uint64_t lo, std::uint64_t hi) {
        ScoreBuffer buf(n);
        Rng rng(Rng::mix(round_seed, 0x9e3779b9ULL + static_cast<std::uint64_t>(t)));
        for (std::uint64_t i = lo; i < hi; ++i) {
          update_vertex<true>(g, clustering.labels, order[i], buf, rng, occ);
        }
      });
    }
  }
  return clustering;
}

Clustering fix_misplaced(const Graph& g, Clustering clustering, int threads) {
  const NodeID n = g.vertex_count();
  if (n < 2) return clustering;
  const NodeID size_limit = static_cast<NodeID>(std::log2(static_cast<double>(n)));
  if (size_limit < 2) return clustering;

  auto [dense, k] = densify_labels(clustering.labels);
  std::vector<EdgeID> offsets(static_cast<std::size_t>(k) + 1, 0);
  std::vector<NodeID> members(n);
  for (NodeID label : dense) ++offsets[label + 1];
  for (NodeID c = 0; c < k; ++c) offsets[c + 1] += offsets[c];
  {
    std::vector<EdgeID> fill(offsets.begin(), offsets.end() - 1);
    for (NodeID v = 0; v < n; ++v) members[fill[dense[v]]++] = v;
  }

  NodeID max_label = 0;
  for (NodeID l : clustering.labels) max_label = std::max(max_label, l);
  std::atomic<NodeID> next_fresh{std::max(n, max_label + 1)};
  auto process_cluster = [&](NodeID c) {
    const EdgeID begin = offsets[c];
    const EdgeID end = offsets[c + 1];
    const EdgeID size = end - begin;
    if (size < 2 || size > static_cast<EdgeID>(size_limit)) return;

    // boundary weight of the whole cluster and of each member
    EdgeWeight cluster_out = 0;
    for (EdgeID i = begin; i < end; ++i) {
      const NodeID v = members[i];
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        if (dense[g.target(e)] != c) cluster_out += g.weight(e);
      }
    }
    for (EdgeID i = begin; i < end; ++i) {
      const NodeID v = members[i];
      EdgeWeight v_out = 0;
      for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
        if (dense[g.target(e)] != c) v_out += g.weight(e);
      }
      const EdgeWeight v_in = g.weighted_degree(v) - v_out;
      const EdgeWeight without_v = cluster_out - v_out + v_in;
      if (std::min(g.weighted_degree(v), without_v) < cluster_out) {
        clustering.labels[v] = next_fresh.fetch_add(1, std::memory_order_relaxed);
        return;  // one extraction per cluster per sweep
      }
    }
  };

  if (threads <= 1) {
    for (NodeID c = 0; c < k; ++c) process_cluster(c);
  } else {
    // cluster granularity: no cluster is touched by two threads
    parallel_chunks(0, k, threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t c = lo; c < hi; ++c) process_cluster(static_cast<NodeID>(c));
    });
  }
  return clustering;
}

}  // namespace mincut
