#pragma once

#include <cstdint>

namespace tricount::rng {

// SplitMix64: counter-based 64-bit stream (state advances by a fixed
// increment, output is an invertible mix of the state). Fixed as the
// project-wide generator so every sampled object — coloring, edge sample,
// G(n,p) instance — is reproducible from a 64-bit seed.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Splitting rule: substream `index` of master seed `s` starts at
// mix64(s + (index+1)*golden). Every place that needs a fresh but
// reproducible seed (per-vertex color streams, per-trial seeds, doubling
// probes) derives it through this one function.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + kGolden * (index + 1));
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform in [0, bound) by bounded rejection; no modulo bias.
  // bound must be >= 1.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = next();
    while (x < min) x = next();
    return x % bound;
  }

  // Uniform double in [0, 1) from the high 53 bits.
  constexpr double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(derive_seed(seed, index));
}

}  // namespace tricount::rng
