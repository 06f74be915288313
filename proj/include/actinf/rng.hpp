#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace actinf {

/// splitmix64 step; used to derive independent seed streams (per topic,
/// per replicate) from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic RNG. mt19937_64 output is pinned by the standard and all
/// variate transforms below are our own, so streams are identical across
/// platforms and standard library implementations (std::*_distribution
/// would not be).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [lo, hi], inclusive. Unbiased via rejection.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  /// Exponential waiting time with the given rate.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  /// Binomial(trials, p) by direct Bernoulli summation; always consumes
  /// exactly `trials` draws so the stream layout does not depend on p.
  int binomial(int trials, double p) {
    int count = 0;
    for (int i = 0; i < trials; ++i) {
      if (uniform01() < p) ++count;
    }
    return count;
  }

  bool coin() { return (next_u64() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace actinf
