#pragma once

#include <cstdint>
#include <random>

namespace tpsm {

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
// The raw mt19937_64 sequence is pinned by the standard, so building the
// double this way (instead of std::uniform_real_distribution, whose
// algorithm is implementation-defined) keeps seeded sequences identical
// across platforms and standard libraries.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(gen);
}

}  // namespace tpsm
