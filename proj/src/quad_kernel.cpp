#include "quad_kernel.hpp"

#include <algorithm>
#include <utility>

namespace tstar {

namespace {

// max(a, b) < min(c, d)
inline bool below(double a, double b, double c, double d) noexcept {
  return std::max(a, b) < std::min(c, d);
}

template <class T, class Less>
void sort4(std::array<T, 4>& v, Less less) noexcept {
  auto order = [&](std::size_t i, std::size_t j) {
    if (less(v[j], v[i])) std::swap(v[i], v[j]);
  };
  order(0, 1);
  order(2, 3);
  order(0, 2);
  order(1, 3);
  order(1, 2);
}

}  // namespace

const char* toString(QuadClass c) noexcept {
  switch (c) {
    case QuadClass::Concordant:
      return "concordant";
    case QuadClass::Discordant:
      return "discordant";
    case QuadClass::Inseparable:
      break;
  }
  return "inseparable";
}

int signKernel(double z1, double z2, double z3, double z4) noexcept {
  return static_cast<int>(below(z1, z3, z2, z4)) +
         static_cast<int>(below(z2, z4, z1, z3)) -
         static_cast<int>(below(z1, z2, z3, z4)) -
         static_cast<int>(below(z3, z4, z1, z2));
}

QuadClass classifyQuad(const Point& p1, const Point& p2, const Point& p3,
                       const Point& p4) noexcept {
  std::array<Point, 4> pts{p1, p2, p3, p4};
  sort4(pts, [](const Point& a, const Point& b) { return a.x < b.x; });
  if (pts[1].x == pts[2].x) return QuadClass::Inseparable;

  // Some ordering has y(1) <= y(2) = y(3) <= y(4) exactly when the two middle
  // order statistics of the y's coincide.
  std::array<double, 4> ys{pts[0].y, pts[1].y, pts[2].y, pts[3].y};
  sort4(ys, [](double a, double b) { return a < b; });
  if (ys[1] == ys[2]) return QuadClass::Inseparable;

  if (below(pts[0].y, pts[1].y, pts[2].y, pts[3].y) ||
      below(pts[2].y, pts[3].y, pts[0].y, pts[1].y)) {
    return QuadClass::Concordant;
  }
  return QuadClass::Discordant;
}

int bruteB(const Point& p1, const Point& p2, const Point& p3,
           const Point& p4) noexcept {
  const std::array<Point, 4> pts{p1, p2, p3, p4};
  std::array<int, 4> perm{0, 1, 2, 3};
  int sum = 0;
  do {
    const Point& a = pts[perm[0]];
    const Point& b = pts[perm[1]];
    const Point& c = pts[perm[2]];
    const Point& d = pts[perm[3]];
    sum += signKernel(a.x, b.x, c.x, d.x) * signKernel(a.y, b.y, c.y, d.y);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace tstar
