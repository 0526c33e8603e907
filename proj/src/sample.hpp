#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tstar {

struct Point {
  double x;
  double y;

  friend bool operator==(const Point&, const Point&) = default;
};

// Raw observations in input order. Construction rejects non-finite
// coordinates, so every downstream algorithm may assume finite data.
class PairedSample {
 public:
  PairedSample() = default;
  explicit PairedSample(std::vector<Point> points);

  static PairedSample fromColumns(std::span<const double> x,
                                  std::span<const double> y);

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  bool hasTiesX() const noexcept { return tiesX_; }
  bool hasTiesY() const noexcept { return tiesY_; }

 private:
  std::vector<Point> points_;
  bool tiesX_ = false;
  bool tiesY_ = false;
};

// Observations stably sorted by ascending x with y carried along.
struct SortedSample {
  std::vector<double> x;
  std::vector<double> y;
  bool hasTiesX = false;
  bool hasTiesY = false;

  std::size_t size() const noexcept { return x.size(); }
};

SortedSample sortByX(const PairedSample& sample);

// Replaces each coordinate by its midrank (1-based average rank within ties).
PairedSample toMidranks(const PairedSample& sample);

// Average ranks of `values`; tied entries share the mean of their positions.
std::vector<double> midranks(std::span<const double> values);

}  // namespace tstar
