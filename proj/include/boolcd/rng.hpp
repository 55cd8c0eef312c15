#pragma once

#include <cmath>
#include <cstdint>

namespace boolcd {

/// SplitMix64 (Steele/Lea/Flood). Fixed algorithm rather than std::mt19937 so
/// "same seed, same draws" is a cross-platform contract instead of a standard
/// library accident. Bernoulli draws go through an integer threshold compare,
/// never a floating-point uniform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Derive an independent child generator. Each factor matrix, the core and
  /// the noise pass draw from their own stream so adding one consumer does not
  /// shift any other consumer's sequence.
  SplitMix64 split() { return SplitMix64(next_u64()); }

  /// Bernoulli(p), p in [0,1]. Exactly one draw is consumed per call no matter
  /// the outcome, and the compare is against a 32-bit integer threshold.
  bool bernoulli(double p) {
    if (p <= 0.0) {
      next_u64();
      return false;
    }
    if (p >= 1.0) {
      next_u64();
      return true;
    }
    const auto threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
    return (next_u64() >> 32) < threshold;
  }

 private:
  std::uint64_t state_;
};

}  // namespace boolcd
