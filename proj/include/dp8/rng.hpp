#pragma once

#include <cstdint>

namespace dp8 {

// SplitMix64. Used instead of <random> engines/distributions so that seeded
// runs are byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }

  // uniform in [-bound, bound]
  long integer(long bound) {
    return long(below(2 * uint64_t(bound) + 1)) - bound;
  }

  // uniform in [-bound, bound] \ {0}
  long nonzero_integer(long bound) {
    long v = long(below(2 * uint64_t(bound))) - bound;
    return v >= 0 ? v + 1 : v;
  }

 private:
  uint64_t state_;
};

}  // namespace dp8
