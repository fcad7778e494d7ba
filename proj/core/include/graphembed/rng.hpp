#pragma once

#include <cstdint>

namespace graphembed {

// xoroshiro128+ seeded through splitmix64, as in the usual embedding
// toolchains. Streams derived from (seed, source, replicate) are
// independent of worker scheduling, which is what makes parallel corpus
// generation reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    state_[0] = splitmix64(x);
    state_[1] = splitmix64(x);
  }

  // Stream for an independent task, keyed by up to two indices.
  static Rng for_task(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t x = seed;
    std::uint64_t s = splitmix64(x);
    x = s ^ (a + 0x9e3779b97f4a7c15ULL);
    s = splitmix64(x);
    x = s ^ (b + 0xbf58476d1ce4e5b9ULL);
    Rng r(0);
    r.state_[0] = splitmix64(x);
    r.state_[1] = splitmix64(x);
    return r;
  }

  std::uint64_t next() {
    const std::uint64_t s0 = state_[0];
    std::uint64_t s1 = state_[1];
    const std::uint64_t result = s0 + s1;
    s1 ^= s0;
    state_[0] = rotl(s0, 55) ^ s1 ^ (s1 << 14);
    state_[1] = rotl(s1, 36);
    return result;
  }

  // Unbiased integer in [0, bound). bound must be nonzero.
  std::uint32_t next_below(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(next32()) * bound;
    std::uint32_t lo = static_cast<std::uint32_t>(m);
    if (lo < bound) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
      while (lo < threshold) {
        m = static_cast<std::uint64_t>(next32()) * bound;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  // Double in [0, 1).
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Double in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

private:
  std::uint32_t next32() { return static_cast<std::uint32_t>(next() >> 32); }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[2];
};

} // namespace graphembed
