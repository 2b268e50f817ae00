#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace bia {

/// Deterministic 64-bit generator (splitmix64). All randomness in the toolkit
/// flows from one root seed through derive_seed() so that runs are exactly
/// reproducible regardless of thread scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), rejection sampled.
  uint64_t below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Standard normal via Box-Muller; draws pairs, caches the spare.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = unit();
    } while (u1 <= 0.0);
    u2 = unit();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(6.283185307179586 * u2);
    has_spare_ = true;
    return mag * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Counter-based split: folds a path of tags into the root seed so that each
/// (module, receiver, trial, ...) gets an independent deterministic stream.
inline uint64_t derive_seed(uint64_t root, std::initializer_list<uint64_t> path) {
  Rng mix(root ^ 0xd1b54a32d192ed03ULL);
  uint64_t s = mix.next();
  for (uint64_t part : path) {
    Rng step(s ^ (part + 0x9e3779b97f4a7c15ULL));
    s = step.next();
  }
  return s;
}

namespace seed_tag {
constexpr uint64_t kChannel = 1;
constexpr uint64_t kNoise = 2;
constexpr uint64_t kSymbols = 3;
constexpr uint64_t kVerify = 4;
constexpr uint64_t kSimulate = 5;
}  // namespace seed_tag

}  // namespace bia
