#pragma once

#include "g4/intmath.hpp"

namespace g4 {

// splitmix64 stream; cheap to fork by deriving a new seed.
class Rng {
 public:
  explicit Rng(u64 seed) : s_(seed) {}

  u64 next() {
    s_ += 0x9e3779b97f4a7c15ULL;
    u64 x = s_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, n). n > 0.
  u64 below(u64 n) {
    u64 lim = ~u64{0} - ~u64{0} % n;
    u64 x = next();
    while (x >= lim) x = next();
    return x % n;
  }

 private:
  u64 s_;
};

}  // namespace g4
