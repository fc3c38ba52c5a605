#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace mincut {

/// Seedable PRNG used everywhere randomness is needed. Wraps std::mt19937_64
/// but implements bounded draws and shuffles by hand so results do not depend
/// on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound == 0 returns 0.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // rejection below the threshold keeps the draw unbiased
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = next();
    while (x < threshold) x = next();
    return x % bound;
  }

  /// Uniform in [lo, hi], inclusive.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + bounded(hi - lo + 1);
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// Derive an independent stream seed (splitmix64 finalizer).
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mincut
