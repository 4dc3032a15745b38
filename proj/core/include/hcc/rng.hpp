#pragma once

#include <cstdint>
#include <random>

namespace hcc {

// Project-wide RNG. std::mt19937_64's output sequence is pinned by the
// standard, so seeded runs reproduce bit-identically across platforms. All
// value mappings below are explicit; std::uniform_*_distribution is never
// used because its output is implementation-defined.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform double in the open interval (0, 1); exact zeros are redrawn.
inline double uniform_open_unit(Rng& g) {
  double u;
  do {
    u = uniform_unit(g);
  } while (u == 0.0);
  return u;
}

// Unbiased uniform integer in [0, n) by rejection.
inline std::uint64_t uniform_below(Rng& g, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x;
  do {
    x = g();
  } while (x < threshold);
  return x % n;
}

}  // namespace hcc
