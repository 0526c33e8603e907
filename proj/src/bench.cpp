#include "bench.hpp"

#include <chrono>
#include <string>

#include "error.hpp"
#include "fast_tstar.hpp"
#include "naive_oracle.hpp"
#include "rng.hpp"

namespace tstar::bench {

namespace {

// Keeps results observable so the timed calls cannot be elided.
volatile double g_sink = 0.0;

void validate(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no bench sizes given");
  if (cfg.methods.empty()) throw Error(ErrorCode::InvalidArgument, "no bench methods given");
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  for (std::size_t n : cfg.sizes) {
    if (n < 4) {
      throw Error(ErrorCode::InvalidArgument,
                  "bench sizes must be at least 4, got " + std::to_string(n));
    }
    for (Method m : cfg.methods) {
      if (m == Method::Naive && n > kNaiveLimit && !cfg.allowLargeNaive) {
        throw Error(ErrorCode::Limit, "naive method refuses n = " + std::to_string(n) +
                                          " > " + std::to_string(kNaiveLimit) +
                                          " without --allow-large-naive");
      }
    }
  }
}

}  // namespace

const char* toString(Method m) noexcept { return m == Method::Fast ? "fast" : "naive"; }

PairedSample benchDataset(std::uint64_t seed, std::size_t n, std::size_t t) {
  rng::Engine engine(rng::deriveSeed(seed, {n, t}));
  return rng::normalPairs(n, engine);
}

double timeOnce(Method method, const PairedSample& sample) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  double value = 0.0;
  if (method == Method::Fast) {
    value = fast::tStarGeneralU(sortByX(sample)).value;
  } else {
    value = naive::naiveU(sample).value;
  }
  const auto stop = Clock::now();
  g_sink = g_sink + value;
  return std::chrono::duration<double>(stop - start).count();
}

BenchReport run(const BenchConfig& cfg) {
  validate(cfg);
  BenchReport report;
  for (std::size_t n : cfg.sizes) {
    std::vector<PairedSample> datasets;
    datasets.reserve(cfg.trials + 1);
    for (std::size_t t = 0; t <= cfg.trials; ++t) {
      datasets.push_back(benchDataset(cfg.seed, n, t));
    }
    for (Method m : cfg.methods) {
      timeOnce(m, datasets[0]);
      double total = 0.0;
      for (std::size_t t = 1; t <= cfg.trials; ++t) total += timeOnce(m, datasets[t]);
      report.rows.push_back({n, m, total / static_cast<double>(cfg.trials), cfg.trials});
    }
  }
  return report;
}

}  // namespace tstar::bench
