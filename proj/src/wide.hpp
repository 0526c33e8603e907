#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace tstar {

// Exact accumulator type for weighted quadruple counts. 16 * C(n, 4) leaves
// the int64 range near n = 60000, below the largest supported sample size.
using Wide = __int128;

inline std::string toDecimal(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the magnitude as unsigned so the minimum value does not overflow.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline std::optional<std::int64_t> narrow(Wide v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

// m choose 2.
constexpr std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

inline Wide choose4(std::int64_t n) {
  if (n < 4) return 0;
  const Wide w = n;
  return w * (w - 1) * (w - 2) * (w - 3) / 24;
}

}  // namespace tstar
