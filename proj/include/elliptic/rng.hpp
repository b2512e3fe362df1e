#pragma once

#include <cstdint>
#include <random>

namespace elliptic {

/// SplitMix64 (Steele, Lea, Flood 2014); used to spread a master seed into
/// well-separated stream seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Seed of stream `index` for a given master seed: the (index+1)-th SplitMix64
/// output started from master ^ golden-ratio constant. Stable across platforms.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

/// Standard normal deviates from std::mt19937_64 through the Box-Muller
/// transform. Both the engine and the transform are fully specified, so a
/// given seed yields the same sequence on every conforming platform (up to
/// libm rounding in log/sin/cos).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();
  /// Uniform on (0, 1], 53 bits.
  double uniform();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace elliptic
