#include "naive_oracle.hpp"

#include <string>

#include "error.hpp"
#include "quad_kernel.hpp"

namespace tstar::naive {

namespace {

void requireAtLeastFour(std::size_t n) {
  if (n < 4) {
    throw Error(ErrorCode::Size,
                "U-statistic needs at least 4 observations, got " + std::to_string(n));
  }
}

// Adds weight * b for the quadruple to the split accumulators.
struct SplitTally {
  Wide concordant = 0;
  Wide discordant = 0;

  void add(const Point& a, const Point& b, const Point& c, const Point& d,
           int weight) {
    switch (classifyQuad(a, b, c, d)) {
      case QuadClass::Concordant:
        concordant += 16 * weight;
        break;
      case QuadClass::Discordant:
        discordant += 8 * weight;
        break;
      case QuadClass::Inseparable:
        break;
    }
  }
};

}  // namespace

TStarResult naiveU(const PairedSample& sample) {
  const std::size_t n = sample.size();
  requireAtLeastFour(n);
  const auto& p = sample.points();

  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          switch (classifyQuad(p[i], p[j], p[k], p[l])) {
            case QuadClass::Concordant:
              ++concordant;
              break;
            case QuadClass::Discordant:
              ++discordant;
              break;
            case QuadClass::Inseparable:
              break;
          }
        }
      }
    }
  }

  TStarResult r;
  r.kind = Kind::U;
  r.path = Path::NaiveU;
  r.n = n;
  r.concordantWeighted = Wide{16} * concordant;
  r.discordantWeighted = Wide{8} * discordant;
  r.denominator = denominatorU(n);
  r.value = toDouble(r.numerator(), r.denominator);
  return r;
}

TStarResult naiveV(const PairedSample& sample) {
  const std::size_t n = sample.size();
  if (n == 0) {
    throw Error(ErrorCode::Size, "V-statistic needs at least 1 observation");
  }
  const auto& p = sample.points();

  // Weights in quarter units: 4 for distinct, 2 for one repeat, 1 for two.
  SplitTally quarter;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      quarter.add(p[i], p[i], p[j], p[j], 1);
      for (std::size_t k = j + 1; k < n; ++k) {
        quarter.add(p[i], p[i], p[j], p[k], 2);
        quarter.add(p[i], p[j], p[j], p[k], 2);
        quarter.add(p[i], p[j], p[k], p[k], 2);
        for (std::size_t l = k + 1; l < n; ++l) {
          quarter.add(p[i], p[j], p[k], p[l], 4);
        }
      }
    }
  }

  TStarResult r;
  r.kind = Kind::V;
  r.path = Path::NaiveV;
  r.n = n;
  r.concordantWeighted = quarter.concordant / 4;
  r.discordantWeighted = quarter.discordant / 4;
  r.denominator = denominatorV(n);
  r.value = toDouble(r.numerator(), r.denominator);
  return r;
}

ExactRatio enumerateU(const PairedSample& sample) {
  const std::size_t n = sample.size();
  requireAtLeastFour(n);
  const auto& p = sample.points();
  Wide sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          sum += signKernel(p[i].x, p[j].x, p[k].x, p[l].x) *
                 signKernel(p[i].y, p[j].y, p[k].y, p[l].y);
        }
      }
    }
  }
  const Wide den = denominatorU(n);
  return {sum, den, toDouble(sum, den)};
}

ExactRatio enumerateV(const PairedSample& sample) {
  const std::size_t n = sample.size();
  if (n == 0) {
    throw Error(ErrorCode::Size, "V-statistic needs at least 1 observation");
  }
  const auto& p = sample.points();
  Wide sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          sum += signKernel(p[i].x, p[j].x, p[k].x, p[l].x) *
                 signKernel(p[i].y, p[j].y, p[k].y, p[l].y);
        }
      }
    }
  }
  const Wide den = denominatorV(n);
  return {sum, den, toDouble(sum, den)};
}

}  // namespace tstar::naive
