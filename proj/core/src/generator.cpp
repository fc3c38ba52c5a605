#include "mincut/generator.hpp"

#include <algorithm>
#include <cmath>

#include "mincut/random.hpp"

namespace mincut {

namespace {

inline std::uint64_t pair_count(NodeID n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Offset of row u in the (u < v) pair enumeration.
inline std::uint64_t row_offset(std::uint64_t u, std::uint64_t n) {
  return u * (2 * n - u - 1) / 2;
}

inline std::pair<NodeID, NodeID> decode_pair(std::uint64_t code, NodeID n) {
  // invert the triangular offset, then fix up rounding
  const double nn = static_cast<double>(n);
  double guess = nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(code));
  std::uint64_t u = guess <= 0 ? 0 : static_cast<std::uint64_t>(guess);
  if (u >= n - 1) u = n - 2;
  while (row_offset(u, n) > code) --u;
  while (u + 1 < static_cast<std::uint64_t>(n) - 1 && row_offset(u + 1, n) <= code) ++u;
  const std::uint64_t v = u + 1 + (code - row_offset(u, n));
  return {static_cast<NodeID>(u), static_cast<NodeID>(v)};
}

std::vector<std::uint64_t> sample_codes(std::uint64_t pairs, std::uint64_t m, Rng& rng) {
  std::vector<std::uint64_t> codes;
  if (m == pairs) {
    codes.resize(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) codes[i] = i;
    return codes;
  }
  constexpr std::uint64_t kShuffleLimit = std::uint64_t{1} << 22;
  if (pairs <= kShuffleLimit) {
    std::vector<std::uint64_t> all(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) all[i] = i;
    for (std::uint64_t i = 0; i < m; ++i) {
      const std::uint64_t j = i + rng.bounded(pairs - i);
      std::swap(all[i], all[j]);
    }
    codes.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(codes.begin(), codes.end());
    return codes;
  }
  // rejection sampling with sort/unique top-up rounds
  codes.reserve(m + m / 16);
  while (codes.size() < m) {
    const std::uint64_t missing = m - codes.size();
    for (std::uint64_t i = 0; i < missing; ++i) codes.push_back(rng.bounded(pairs));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  }
  return codes;
}

}  // namespace

EdgeID clustered_er_edge_count(NodeID n, double density_percent) {
  const long double exact =
      static_cast<long double>(pair_count(n)) * static_cast<long double>(density_percent) / 100.0L;
  return static_cast<EdgeID>(std::floor(exact + 0.5L));  // round half up
}

Graph generate_clustered_er(const ClusteredErParams& p) {
  if (p.n < 1) throw PreconditionError("generator requires n >= 1");
  if (!(p.density_percent > 0) || p.density_percent > 100) {
    throw PreconditionError("density must be in (0, 100]");
  }
  if (p.clusters < 1 || p.clusters > p.n) {
    throw PreconditionError("cluster count must be in [1, n]");
  }

  const std::uint64_t pairs = pair_count(p.n);
  const std::uint64_t m = clustered_er_edge_count(p.n, p.density_percent);
  Rng rng(p.seed);
  std::vector<std::uint64_t> codes =
      m == 0 ? std::vector<std::uint64_t>{} : sample_codes(pairs, m, rng);

  std::vector<EdgeID> offsets(static_cast<std::size_t>(p.n) + 1, 0);
  for (std::uint64_t code : codes) {
    const auto [u, v] = decode_pair(code, p.n);
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (NodeID v = 0; v < p.n; ++v) offsets[v + 1] += offsets[v];

  std::vector<NodeID> targets(2 * m);
  std::vector<EdgeWeight> weights(2 * m);
  std::vector<EdgeID> fill(offsets.begin(), offsets.end() - 1);
  for (std::uint64_t code : codes) {
    const auto [u, v] = decode_pair(code, p.n);
    EdgeWeight w = rng.uniform(1, 100);
    if (u % p.clusters == v % p.clusters) w *= p.n;  // intra-cluster inflation
    targets[fill[u]] = v;
    weights[fill[u]] = w;
    ++fill[u];
    targets[fill[v]] = u;
    weights[fill[v]] = w;
    ++fill[v];
  }
  return Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
}

}  // namespace mincut
