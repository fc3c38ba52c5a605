#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace mincut {

inline int hardware_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

/// Run fn(thread_id, chunk_begin, chunk_end) over [begin, end) split into
/// contiguous chunks, one per worker. The final chunk runs on the calling
/// thread; the call returns after all workers joined.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads, Fn&& fn) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  int t = std::max(1, threads);
  if (static_cast<std::uint64_t>(t) > total) t = static_cast<int>(total);
  if (t == 1) {
    fn(0, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t) - 1);
  const std::uint64_t chunk = total / t;
  const std::uint64_t rem = total % t;
  std::uint64_t lo = begin;
  for (int i = 0; i < t; ++i) {
    const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
    if (i == t - 1) {
      fn(i, lo, hi);
    } else {
      pool.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
    }
    lo = hi;
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace mincut
