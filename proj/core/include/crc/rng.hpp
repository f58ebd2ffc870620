#pragma once

#include <cstdint>
#include <random>

namespace crc {

// Mixes a base seed with an attempt counter so that resampling attempts are
// independent streams and a rerun with the same seed is bit-identical.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t attempt = 0) {
  return std::mt19937_64(mix_seed(seed, attempt));
}

}  // namespace crc
