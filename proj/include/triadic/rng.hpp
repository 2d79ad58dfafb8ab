#pragma once

#include <cstdint>
#include <random>

namespace triadic {

// splitmix64 finalizer; bijective, good avalanche.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent sub-stream seed for (seed, a, b), e.g. (user seed, wedge type,
// sample block). Used so parallel workers draw from disjoint streams.
constexpr uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0) {
  return mix64(seed ^ mix64(a ^ mix64(b)));
}

// mt19937_64 with hand-rolled integer/real draws. The engine's sequence is
// fixed by the standard and std distributions are not, so results stay
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, bound). Masked rejection keeps the draw unbiased.
  uint64_t below(uint64_t bound) {
    uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace triadic
