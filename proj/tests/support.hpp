#pragma once

// Shared generators and brute-force references for the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sample.hpp"

namespace tstar::testing {

using Engine = std::mt19937_64;

enum class Regime { Continuous, Grid5, Grid2, ConstantX, ConstantY, Grid3 };

inline const char* toString(Regime r) {
  switch (r) {
    case Regime::Continuous:
      return "continuous";
    case Regime::Grid5:
      return "grid 5x5";
    case Regime::Grid2:
      return "grid 2x2";
    case Regime::ConstantX:
      return "constant x";
    case Regime::ConstantY:
      return "constant y";
    case Regime::Grid3:
      break;
  }
  return "grid 3x3";
}

inline PairedSample randomSample(Engine& rng, std::size_t n, Regime regime) {
  std::normal_distribution<double> normal;
  auto grid = [&](int k) { return static_cast<double>(std::uniform_int_distribution<int>(1, k)(rng)); };
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    switch (regime) {
      case Regime::Continuous:
        p = {normal(rng), normal(rng)};
        break;
      case Regime::Grid5:
        p = {grid(5), grid(5)};
        break;
      case Regime::Grid3:
        p = {grid(3), grid(3)};
        break;
      case Regime::Grid2:
        p = {grid(2), grid(2)};
        break;
      case Regime::ConstantX:
        p = {1.5, grid(4)};
        break;
      case Regime::ConstantY:
        p = {normal(rng), -2.0};
        break;
    }
  }
  return PairedSample(std::move(pts));
}

// Distinct x and y: a random permutation of 1..n for y against x = 1..n,
// shifted by noise that preserves distinctness.
inline PairedSample randomUntied(Engine& rng, std::size_t n) {
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = static_cast<double>(i) + 0.25;
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {static_cast<double>(n - i) * 1.5, ys[i]};
  std::shuffle(pts.begin(), pts.end(), rng);
  return PairedSample(std::move(pts));
}

inline std::size_t uniformSize(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace tstar::testing
