#include "rng.hpp"

#include <vector>

namespace tstar::rng {

PairedSample normalPairs(std::size_t n, Engine& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = normal(engine);
    p.y = normal(engine);
  }
  return PairedSample(std::move(pts));
}

}  // namespace tstar::rng
