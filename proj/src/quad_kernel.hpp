#pragma once

#include <array>
#include <cstdint>

#include "sample.hpp"

namespace tstar {

enum class QuadClass { Concordant, Discordant, Inseparable };

const char* toString(QuadClass c) noexcept;

// Sign kernel a(z1, z2, z3, z4) in indicator form:
//   I(z1,z3 < z2,z4) + I(z1,z3 > z2,z4) - I(z1,z2 < z3,z4) - I(z1,z2 > z3,z4)
// where I(a,b < c,d) means max(a,b) < min(c,d).
int signKernel(double z1, double z2, double z3, double z4) noexcept;

// Classifies four points, in any argument order.
QuadClass classifyQuad(const Point& p1, const Point& p2, const Point& p3,
                       const Point& p4) noexcept;

// Sum of a(x_pi) * a(y_pi) over all 24 orderings of the four points.
int bruteB(const Point& p1, const Point& p2, const Point& p3,
           const Point& p4) noexcept;

// Closed-form value of bruteB for a quadruple of the given class.
constexpr int lemmaB(QuadClass c) noexcept {
  switch (c) {
    case QuadClass::Concordant:
      return 16;
    case QuadClass::Discordant:
      return -8;
    case QuadClass::Inseparable:
      break;
  }
  return 0;
}

}  // namespace tstar
