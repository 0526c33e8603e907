#pragma once

#include <cstddef>

#include "wide.hpp"

namespace tstar {

enum class Kind { U, V };

// Which routine produced a result.
enum class Path { Untied, General, GeneralV, NaiveU, NaiveV };

const char* toString(Kind k) noexcept;
const char* toString(Path p) noexcept;

// value = (concordantWeighted - discordantWeighted) / denominator, where the
// weighted terms are 16 and 8 times the (possibly fractionally weighted, for V)
// concordant and discordant tallies. All three integers are exact.
struct TStarResult {
  Kind kind = Kind::U;
  Path path = Path::General;
  std::size_t n = 0;
  Wide concordantWeighted = 0;
  Wide discordantWeighted = 0;
  Wide denominator = 0;
  double value = 0.0;

  Wide numerator() const noexcept { return concordantWeighted - discordantWeighted; }
};

// Numerator/denominator pair from a direct kernel sum.
struct ExactRatio {
  Wide numerator = 0;
  Wide denominator = 0;
  double value = 0.0;
};

// Single rounding step from the exact ratio to double.
double toDouble(Wide numerator, Wide denominator) noexcept;

Wide denominatorU(std::size_t n) noexcept;
Wide denominatorV(std::size_t n) noexcept;

}  // namespace tstar
