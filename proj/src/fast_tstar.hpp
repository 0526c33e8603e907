#pragma once

#include <cstdint>

#include "order_stat_index.hpp"
#include "result.hpp"
#include "sample.hpp"

namespace tstar::fast {

// Counts over the indexed y-values relative to min(yk, yl) and max(yk, yl).
// When yk == yl both equality bands probe the same value, so eqMin == eqMax
// and mid == 0; the band is then counted once: top + bot + eqMin == size.
struct PartitionCounts {
  std::int64_t top = 0;
  std::int64_t mid = 0;
  std::int64_t bot = 0;
  std::int64_t eqMin = 0;
  std::int64_t eqMax = 0;

  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

struct PairContribution {
  std::int64_t concordant = 0;
  // Discordant count for the pair before removing inseparable quadruples whose
  // two low-x points share a y strictly inside (min, max); the reverse pass
  // subtracts those.
  std::int64_t discordantOvercounted = 0;

  friend bool operator==(const PairContribution&, const PairContribution&) = default;
};

// Optional operation counter for complexity tests.
struct Instrumentation {
  std::uint64_t comparisons = 0;
};

PartitionCounts partitionCounts(const OrderStatIndex& index, double yk, double yl);

PairContribution pairContribution(const PartitionCounts& c, double yk, double yl);

// Number of concordant quadruples in tie-free data; throws ErrorCode::Route if
// the sample has ties in either coordinate, ErrorCode::Size when n < 4.
std::int64_t countConcordantUntied(const SortedSample& s,
                                   Instrumentation* stats = nullptr);

// Total over-count removed from the forward discordant tally: the sum over
// i < j with y_i == y_j of top*(j) * bot*(j).
Wide reversePassCorrection(const SortedSample& s, Instrumentation* stats = nullptr);

TStarResult tStarUntiedU(const SortedSample& s, Instrumentation* stats = nullptr);
TStarResult tStarGeneralU(const SortedSample& s, Instrumentation* stats = nullptr);
TStarResult tStarGeneralV(const SortedSample& s, Instrumentation* stats = nullptr);

// Sorts, then routes: U without ties -> untied path, U with ties -> general
// path, V -> general V path. The chosen route is recorded in the result.
TStarResult tStar(const PairedSample& sample, Kind kind);

}  // namespace tstar::fast
