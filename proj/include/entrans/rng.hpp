#pragma once

#include <cstdint>
#include <random>

namespace entrans {

// mt19937_64 has a standardized sequence, and the helpers below avoid
// std::uniform_real_distribution, whose output is implementation-defined.
// Seeded runs are therefore bit-reproducible across toolchains.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace entrans
