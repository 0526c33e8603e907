#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "result.hpp"
#include "sample.hpp"

namespace tstar::bench {

enum class Method { Fast, Naive };

const char* toString(Method m) noexcept;

// Sizes above this need allowLargeNaive for the naive method.
inline constexpr std::size_t kNaiveLimit = 500;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<Method> methods;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  bool allowLargeNaive = false;
};

struct BenchRow {
  std::size_t n = 0;
  Method method = Method::Fast;
  double meanSeconds = 0.0;
  std::size_t trials = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Dataset t for size n: independent standard-normal pairs from the stream
// (seed, n, t). Index 0 is the warm-up sample.
PairedSample benchDataset(std::uint64_t seed, std::size_t n, std::size_t t);

// Wall-clock seconds for one U-statistic computation with the given method.
// Fast times the general two-pass algorithm including the sort by x.
double timeOnce(Method method, const PairedSample& sample);

// For each size and method: one discarded warm-up run, then the mean over
// `trials` fresh datasets, each timed single-threaded.
BenchReport run(const BenchConfig& cfg);

}  // namespace tstar::bench
