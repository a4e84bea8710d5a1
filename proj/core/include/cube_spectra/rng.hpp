#pragma once

#include <cstdint>
#include <random>

namespace cube {

/// Seeded random source used by every randomized routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are implemented here rather than taken from
/// <random>, because the standard distributions are implementation-defined
/// and would make reports differ between toolchains.
///
/// Sub-seeds: trial k of an experiment seeded with s uses
/// derive_seed(s, k) = splitmix64(s + 0x9E3779B97F4A7C15 * (k + 1)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open_closed() { return 1.0 - uniform(); }

  /// Uniform integer in [lo, hi] (rejection sampling, unbiased).
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal();

  /// Uniform sign in {-1, +1}.
  int sign() { return (engine_() >> 63) != 0 ? -1 : 1; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cube
