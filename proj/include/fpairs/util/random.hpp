#pragma once

// Seeded sampling with a fixed, documented stream: std::mt19937_64 (its
// output sequence is pinned by the standard) plus rejection sampling for
// bounded integers, so a seed reproduces the same draws on every platform.

#include <cstdint>
#include <random>

namespace fpairs {

using rng = std::mt19937_64;

inline std::uint64_t uniform_below(rng& g, std::uint64_t bound) {
  // reject the low (2^64 mod bound) values to remove modulo bias
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = g();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace fpairs
