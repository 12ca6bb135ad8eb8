#ifndef GMMDS_RNG_HPP
#define GMMDS_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace gmmds {

// Unbiased draw from [0, bound) via rejection. std::mt19937_64's output
// sequence is pinned by the standard, and avoiding
// std::uniform_int_distribution (whose mapping is implementation-defined)
// keeps seeded runs byte-identical across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t rounds = ~std::uint64_t{0} / bound * bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= rounds);
  return x % bound;
}

// First `take` entries of a uniform random permutation of pool (partial
// Fisher-Yates); the rest of pool is left in an arbitrary reusable state.
inline void partial_shuffle(std::mt19937_64& rng, std::vector<int>& pool, int take) {
  const auto size = static_cast<std::uint64_t>(pool.size());
  for (int i = 0; i < take; ++i) {
    const auto j = i + uniform_below(rng, size - i);
    std::swap(pool[i], pool[j]);
  }
}

}  // namespace gmmds

#endif
