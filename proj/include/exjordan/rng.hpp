#ifndef EXJORDAN_RNG_HPP
#define EXJORDAN_RNG_HPP

#include <cstdint>
#include <string>

#include "exjordan/rational.hpp"

namespace exj {

// Deterministic splitmix64 stream. Reports depend only on the seed, never
// on the platform's library RNG or on execution order.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + long(next() % span);
  }

  // Small integer coordinate in [-9, 9]; keeps exact arithmetic fast while
  // exercising every structure constant.
  Rat coeff() { return Rat(uniform(-9, 9)); }

  // Nonzero variant.
  Rat nonzero_coeff() {
    for (;;) {
      long v = uniform(-9, 9);
      if (v != 0) return Rat(v);
    }
  }

  // Independent substream for a named check: results do not depend on the
  // order in which checks run.
  static Rng for_check(uint64_t seed, const std::string& name) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return Rng(seed ^ h);
  }

 private:
  uint64_t state_;
};

}  // namespace exj

#endif
