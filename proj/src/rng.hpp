#pragma once

#include <cstdint>

namespace hopnav {

// splitmix64. Seeded artifacts must be byte-identical across platforms and
// standard libraries, which rules out <random> distributions.
struct Rng64 {
  uint64_t state = 0;
  explicit Rng64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
  double unit() { return (double)(next() >> 11) * 0x1.0p-53; }
};

}  // namespace hopnav
