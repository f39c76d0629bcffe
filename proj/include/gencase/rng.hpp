#pragma once

#include <cstdint>

namespace gencase {

/// SplitMix64 stream. Small, fast, and good enough for sampling letters;
/// the point here is reproducibility, not cryptographic quality.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) via 128-bit multiply. Bias is O(n/2^64), invisible
  /// at any draw count we use.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Stream for trial `index` of a run seeded with `seed`. Trials drawn from
  /// independent streams aggregate the same way under any scheduling.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    std::uint64_t s = mix.next();
    return Rng(s ^ index);
  }

 private:
  std::uint64_t state_;
};

}  // namespace gencase
