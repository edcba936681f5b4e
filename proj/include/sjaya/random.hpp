#pragma once

#include <cstdint>
#include <random>

namespace sjaya {

/// Seeded 64-bit Mersenne Twister with the two draws the optimizers need.
/// Conversions to floating point are done here rather than through
/// std::uniform_real_distribution so a given seed yields the same stream on
/// every standard library.
class RandomSource {
 public:
  /// Independent streams for the same seed are selected by `stream`.
  explicit RandomSource(std::uint64_t seed, std::uint32_t stream = 0);

  /// Uniform in [0, 1) with 53 random bits.
  double canonical() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double unit_open_closed() noexcept { return 1.0 - canonical(); }

  /// Uniform in [lower, upper).
  double uniform(double lower, double upper) noexcept {
    return lower + canonical() * (upper - lower);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sjaya
