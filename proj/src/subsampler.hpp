#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "result.hpp"
#include "sample.hpp"

namespace tstar::subsample {

struct SubsampleConfig {
  std::size_t m = 4;
  std::size_t resamples = 1;
  std::uint64_t seed = 0;
  Kind kind = Kind::U;
};

struct SubsampleEstimate {
  double mean = 0.0;
  // Unbiased (divide by R - 1) variance of the per-subset values; empty when
  // only one resample was drawn.
  std::optional<double> perResampleVariance;
  SubsampleConfig config;
};

// Averages t* over `resamples` uniformly drawn size-m subsets. Subset r is
// drawn from its own generator stream derived from (seed, r), so the result
// depends only on the inputs.
SubsampleEstimate estimate(const PairedSample& sample, const SubsampleConfig& cfg);

struct RelativeVarianceTable {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> subsetSizes;
  std::vector<std::size_t> resampleCounts;
  // relativeVariance[i][j] for subsetSizes[i] and resampleCounts[j].
  std::vector<std::vector<double>> relativeVariance;
  double exactVariance = 0.0;
};

// Over `trials` datasets of n independent standard-normal pairs, the variance
// of each subsampling estimator divided by the variance of the exact U
// statistic. Requires trials >= 30.
RelativeVarianceTable relativeVarianceStudy(std::size_t n,
                                            std::span<const std::size_t> subsetSizes,
                                            std::span<const std::size_t> resampleCounts,
                                            std::size_t trials, std::uint64_t seed);

}  // namespace tstar::subsample
