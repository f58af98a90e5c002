#pragma once

#include <cstdint>
#include <random>

namespace maxorder {

/// 64-bit Mersenne Twister keyed by (seed, stream). Both the engine and
/// std::seed_seq are fully specified by the standard, so draws are identical
/// across platforms; the helpers below avoid the implementation-defined
/// std::*_distribution classes for the same reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace maxorder
