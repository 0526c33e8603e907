#include "subsampler.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"
#include "fast_tstar.hpp"
#include "rng.hpp"

namespace tstar::subsample {

namespace {

// Running mean and sum of squared deviations.
class Welford {
 public:
  void add(double v) {
    ++count_;
    const double delta = v - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (v - mean_);
  }

  double mean() const noexcept { return mean_; }
  std::size_t count() const noexcept { return count_; }

  std::optional<double> sampleVariance() const {
    if (count_ < 2) return std::nullopt;
    return m2_ / static_cast<double>(count_ - 1);
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

void validate(std::size_t n, const SubsampleConfig& cfg) {
  if (cfg.m < 4) {
    throw Error(ErrorCode::InvalidArgument,
                "subset size m must be at least 4, got " + std::to_string(cfg.m));
  }
  if (cfg.m > n) {
    throw Error(ErrorCode::InvalidArgument, "subset size m = " + std::to_string(cfg.m) +
                                                " exceeds sample size " +
                                                std::to_string(n));
  }
  if (cfg.resamples < 1) {
    throw Error(ErrorCode::InvalidArgument, "resamples must be at least 1");
  }
}

}  // namespace

SubsampleEstimate estimate(const PairedSample& sample, const SubsampleConfig& cfg) {
  const std::size_t n = sample.size();
  validate(n, cfg);

  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::vector<std::size_t> swapped(cfg.m);
  std::vector<Point> subset(cfg.m);

  Welford acc;
  for (std::size_t r = 0; r < cfg.resamples; ++r) {
    rng::Engine engine(rng::deriveSeed(cfg.seed, {r}));
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (std::size_t i = 0; i < cfg.m; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng::bounded(engine, n - i));
      swapped[i] = j;
      std::swap(slots[i], slots[j]);
      subset[i] = sample[slots[i]];
    }
    acc.add(fast::tStar(PairedSample(subset), cfg.kind).value);
    // Undo the swaps so every resample starts from the identity arrangement.
    for (std::size_t i = cfg.m; i-- > 0;) std::swap(slots[i], slots[swapped[i]]);
  }

  SubsampleEstimate est;
  est.mean = acc.mean();
  est.perResampleVariance = acc.sampleVariance();
  est.config = cfg;
  return est;
}

RelativeVarianceTable relativeVarianceStudy(std::size_t n,
                                            std::span<const std::size_t> subsetSizes,
                                            std::span<const std::size_t> resampleCounts,
                                            std::size_t trials, std::uint64_t seed) {
  if (trials < 30) {
    throw Error(ErrorCode::InvalidArgument,
                "relative variance study needs at least 30 trials, got " +
                    std::to_string(trials));
  }
  if (n < 4) {
    throw Error(ErrorCode::InvalidArgument, "dataset size must be at least 4");
  }
  if (subsetSizes.empty() || resampleCounts.empty()) {
    throw Error(ErrorCode::InvalidArgument, "subset size and resample lists must be non-empty");
  }
  for (std::size_t m : subsetSizes) validate(n, {m, 1, 0, Kind::U});
  for (std::size_t r : resampleCounts) validate(n, {4, r, 0, Kind::U});

  const std::size_t rows = subsetSizes.size();
  const std::size_t cols = resampleCounts.size();
  Welford exact;
  std::vector<Welford> cells(rows * cols);

  for (std::size_t d = 0; d < trials; ++d) {
    rng::Engine engine(rng::deriveSeed(seed, {0, d}));
    const PairedSample data = rng::normalPairs(n, engine);
    exact.add(fast::tStar(data, Kind::U).value);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const SubsampleConfig cfg{subsetSizes[i], resampleCounts[j],
                                  rng::deriveSeed(seed, {1, d, i, j}), Kind::U};
        cells[i * cols + j].add(estimate(data, cfg).mean);
      }
    }
  }

  RelativeVarianceTable table;
  table.n = n;
  table.trials = trials;
  table.seed = seed;
  table.subsetSizes.assign(subsetSizes.begin(), subsetSizes.end());
  table.resampleCounts.assign(resampleCounts.begin(), resampleCounts.end());
  table.exactVariance = *exact.sampleVariance();
  table.relativeVariance.assign(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      table.relativeVariance[i][j] =
          *cells[i * cols + j].sampleVariance() / table.exactVariance;
    }
  }
  return table;
}

}  // namespace tstar::subsample
