#pragma once

#include <cstdint>
#include <random>

namespace goppa {

// std::mt19937_64 output is fully specified by the standard; the std
// distributions are not, so sampling goes through these helpers to keep
// seeded outputs identical across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace goppa
