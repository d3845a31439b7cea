#pragma once

#include <cstdint>
#include <random>

namespace lattice {

/// SplitMix64 finaliser; used only to derive engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Portable random stream: std::mt19937_64 (whose output sequence is fixed by
/// the standard) seeded with splitmix64(splitmix64(seed) ^ stream). Each
/// trial of a run uses its own stream index, so results do not depend on how
/// trials are sharded across workers. Conversions to doubles and bounded
/// integers are done here rather than through <random> distributions, whose
/// output is implementation-defined.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(splitmix64(seed) ^ stream)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p); p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lattice
