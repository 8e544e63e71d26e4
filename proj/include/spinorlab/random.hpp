#pragma once

// Counter-based generator: word i of stream s under seed k is
//
//   key    = mix64(k ^ mix64(s))
//   word_i = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)
//
// with mix64 the SplitMix64 finalizer. Doubles take the top 53 bits:
// (word >> 11) * 2^-53, uniform on [0, 1).

#include <cstdint>

#include "spinor.hpp"

namespace spinorlab {

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix64(seed ^ mix64(stream))) {}

  std::uint64_t word(std::uint64_t i) const { return mix64(key_ + (i + 1) * kGolden); }
  std::uint64_t next() { return word(counter_++); }
  std::uint64_t counter() const { return counter_; }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  cplx complex(double lo = -1.0, double hi = 1.0) {
    const double re = uniform(lo, hi);
    return {re, uniform(lo, hi)};
  }

  /// Components re/im uniform in [-1, 1], drawn in order re0, im0, re1, ...
  Spinor spinor() {
    Spinor s;
    for (int i = 0; i < 4; ++i) s[i] = complex();
    return s;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace spinorlab
