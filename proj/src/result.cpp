#include "result.hpp"

namespace tstar {

const char* toString(Kind k) noexcept { return k == Kind::U ? "U" : "V"; }

const char* toString(Path p) noexcept {
  switch (p) {
    case Path::Untied:
      return "untied";
    case Path::General:
      return "general";
    case Path::GeneralV:
      return "general-v";
    case Path::NaiveU:
      return "naive-u";
    case Path::NaiveV:
      break;
  }
  return "naive-v";
}

double toDouble(Wide numerator, Wide denominator) noexcept {
  constexpr Wide kExact = Wide{1} << 53;
  const auto magnitude = [](Wide v) { return v < 0 ? -v : v; };
  if (magnitude(numerator) <= kExact && magnitude(denominator) <= kExact) {
    // Both operands are exact doubles, so IEEE division rounds correctly.
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  return static_cast<double>(static_cast<long double>(numerator) /
                             static_cast<long double>(denominator));
}

Wide denominatorU(std::size_t n) noexcept {
  const Wide w = static_cast<Wide>(n);
  return w * (w - 1) * (w - 2) * (w - 3);
}

Wide denominatorV(std::size_t n) noexcept {
  const Wide w = static_cast<Wide>(n);
  return w * w * w * w;
}

}  // namespace tstar
