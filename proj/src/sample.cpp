#include "sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"

namespace tstar {

namespace {

bool hasDuplicates(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

}  // namespace

PairedSample::PairedSample(std::vector<Point> points) : points_(std::move(points)) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points_.size());
  ys.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::NonFinite,
                  "non-finite coordinate at observation " + std::to_string(i + 1));
    }
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  tiesX_ = hasDuplicates(std::move(xs));
  tiesY_ = hasDuplicates(std::move(ys));
}

PairedSample PairedSample::fromColumns(std::span<const double> x,
                                       std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "x and y columns differ in length (" + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()) + ")");
  }
  std::vector<Point> pts(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) pts[i] = {x[i], y[i]};
  return PairedSample(std::move(pts));
}

SortedSample sortByX(const PairedSample& sample) {
  const auto& pts = sample.points();
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x < pts[b].x;
  });

  SortedSample s;
  s.x.reserve(pts.size());
  s.y.reserve(pts.size());
  for (std::size_t i : order) {
    s.x.push_back(pts[i].x);
    s.y.push_back(pts[i].y);
  }
  s.hasTiesX = sample.hasTiesX();
  s.hasTiesY = sample.hasTiesY();
  return s;
}

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  std::size_t run = 0;
  while (run < order.size()) {
    std::size_t end = run + 1;
    while (end < order.size() && values[order[end]] == values[order[run]]) ++end;
    // Positions run..end-1 (0-based) share rank mean of (run+1)..end.
    const double shared = 0.5 * static_cast<double>(run + 1 + end);
    for (std::size_t i = run; i < end; ++i) ranks[order[i]] = shared;
    run = end;
  }
  return ranks;
}

PairedSample toMidranks(const PairedSample& sample) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(sample.size());
  ys.reserve(sample.size());
  for (const Point& p : sample.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return PairedSample::fromColumns(midranks(xs), midranks(ys));
}

}  // namespace tstar
