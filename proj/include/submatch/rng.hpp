#pragma once

#include <cstdint>

namespace submatch {

// Counter-based PRNG (SplitMix64 finalizer). All randomness in the project
// flows through this engine so that a seed fixes every draw on every platform:
// no libm, no distribution objects, integer arithmetic only.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform in [0, bound), bound > 0. Lemire multiply-shift with
  // rejection on the short range.
  uint64_t next_below(uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Hash-split seed derivation: independent streams from one master seed.
// Order-independent, so per-sample seeds do not depend on evaluation order.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return mix64(master ^ mix64(stream + 0x9e3779b97f4a7c15ull));
}

}  // namespace submatch
