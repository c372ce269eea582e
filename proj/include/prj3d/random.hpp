#pragma once

#include <cstdint>
#include <limits>

#include "scalar.hpp"

namespace prj3d {

/// PCG32 (XSH-RR output, 64-bit LCG state). The stream is fixed so seeded
/// runs reproduce across platforms:
///   state' = state * 6364136223846793005 + inc
///   out    = rotr32(((state >> 18) ^ state) >> 27, state >> 59)
/// Seeding follows the reference pcg32_srandom(seed, stream).
class Pcg32 {
 public:
  using result_type = std::uint32_t;

  explicit Pcg32(std::uint64_t seed = 0, std::uint64_t stream = 0x5851f42d4c957f2dULL) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    (*this)();
    state_ += seed;
    (*this)();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint32_t below(std::uint32_t bound) {
    std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
    for (;;) {
      std::uint32_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint32_t>(hi - lo + 1))); }

  /// Uniform integer c with -2^(tau-1) <= c < 2^(tau-1), i.e. bitsize at most tau.
  Int bits(int tau) {
    Int x = 0;
    int remaining = tau;
    while (remaining > 0) {
      int take = remaining >= 32 ? 32 : remaining;
      std::uint32_t w = (*this)();
      if (take < 32) w &= (1u << take) - 1u;
      x <<= take;
      x += static_cast<unsigned long>(w);
      remaining -= take;
    }
    return x - (Int(1) << (tau - 1));
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace prj3d
