#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "sample.hpp"

namespace tstar::rng {

using Engine = std::mt19937_64;

// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for the stream identified by (seed, tags...). Distinct tag tuples give
// unrelated streams, so work can be split or reordered without changing output.
inline std::uint64_t deriveSeed(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> tags) noexcept {
  std::uint64_t h = mix(seed);
  for (std::uint64_t t : tags) h = mix(h ^ mix(t));
  return h;
}

// Uniform integer in [0, bound) by multiply-shift with rejection (Lemire).
// Written out rather than using std::uniform_int_distribution so the draw
// sequence does not depend on the standard library implementation.
inline std::uint64_t bounded(Engine& engine, std::uint64_t bound) {
  std::uint64_t x = engine();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = engine();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// n independent pairs of standard normals.
PairedSample normalPairs(std::size_t n, Engine& engine);

}  // namespace tstar::rng
