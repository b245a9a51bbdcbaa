#include "polarnet/rng.hpp"

#include <cmath>
#include <limits>

namespace polarnet {

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t Rng::geometric_skip(double p) {
  if (p >= 1.0) return 0;
  const double u = uniform();
  const double skip = std::floor(std::log1p(-u) / std::log1p(-p));
  if (!(skip < static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2))) {
    return std::numeric_limits<std::uint64_t>::max() / 2;
  }
  return static_cast<std::uint64_t>(skip);
}

}  // namespace polarnet
