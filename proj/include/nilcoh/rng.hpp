#pragma once

#include <cstdint>

namespace nilcoh {

// splitmix64. Used instead of <random> engines/distributions so that seeded
// sweeps produce identical sequences on every platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive, by rejection.
  long long uniform(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit)
      x = next();
    return lo + static_cast<long long>(x % span);
  }

  bool flip() { return (next() & 1) != 0; }

private:
  std::uint64_t state_;
};

}  // namespace nilcoh
