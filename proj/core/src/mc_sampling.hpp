#pragma once

// Internal Monte Carlo plumbing shared by the density-evolution estimator
// and the genie-aided successive-cancellation oracle. Not installed.

#include <cstdint>
#include <random>
#include <vector>

namespace pdpolar::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Per-block engine seed: blocks are independent streams, so a merged
// estimate is identical whether blocks run serially or chunked.
inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(splitmix64(seed) ^ (block + 1));
}

// mt19937_64 output mapped to [0, 1); the engine is fully specified by
// the standard, so streams are portable across platforms (the standard
// distributions are not).
inline double unit_draw(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// 64 independent Bernoulli(p) indicators packed into one word.
inline std::uint64_t bernoulli_word(std::mt19937_64& eng, double p) {
  std::uint64_t w = 0;
  for (int b = 0; b < 64; ++b)
    w |= static_cast<std::uint64_t>(unit_draw(eng) < p) << b;
  return w;
}

// Propagates packed erasure indicators through the polar butterfly.
// Combining two size-m sub-blocks: out[2j] = left[j] | right[j] (the
// minus channel is erased if either copy is), out[2j+1] = left[j] &
// right[j] (the plus channel only if both are). The resulting index
// order matches polarize_exact.
inline void propagate_indicators(std::vector<std::uint64_t>& words,
                                 std::vector<std::uint64_t>& scratch) {
  const std::size_t n = words.size();
  scratch.resize(n);
  for (std::size_t m = 2; m <= n; m <<= 1) {
    const std::size_t half = m / 2;
    for (std::size_t block = 0; block < n; block += m) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::uint64_t left = words[block + j];
        const std::uint64_t right = words[block + half + j];
        scratch[2 * j] = left | right;
        scratch[2 * j + 1] = left & right;
      }
      for (std::size_t j = 0; j < m; ++j) words[block + j] = scratch[j];
    }
  }
}

inline std::uint64_t tail_mask(std::uint64_t samples, std::uint64_t block,
                               std::uint64_t n_blocks) {
  if (block + 1 == n_blocks && samples % 64 != 0)
    return (std::uint64_t{1} << (samples % 64)) - 1;
  return ~std::uint64_t{0};
}

}  // namespace pdpolar::detail
