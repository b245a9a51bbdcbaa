#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace polarnet {

/// Seedable random source whose output is identical across platforms.
///
/// Bits come from std::mt19937_64, whose sequence is fixed by the standard.
/// The standard distributions are implementation-defined, so every derived
/// quantity (uniform reals, bounded integers, shuffles, geometric skips) is
/// computed here from raw 64-bit draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Number of failures before the first success of a Bernoulli(p) stream.
  /// p must lie in (0, 1].
  std::uint64_t geometric_skip(double p);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polarnet
