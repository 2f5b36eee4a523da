#pragma once

#include <cstdint>

namespace critpoints {

/// SplitMix64 (Steele, Lea, Flood 2014). The generator is part of the
/// reproducibility contract: instances depend only on the seed and this exact
/// algorithm, never on the standard library's engines.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithmTag = "splitmix64+rejection";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection of the biased tail.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      std::uint64_t v = next();
      if (v >= limit) return v % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace critpoints
