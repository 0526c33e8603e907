#include "fast_tstar.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"

namespace tstar::fast {

namespace {

void requireAtLeastFour(std::size_t n) {
  if (n < 4) {
    throw Error(ErrorCode::Size,
                "U-statistic needs at least 4 observations, got " + std::to_string(n));
  }
}

PartitionCounts countsFromRanks(std::int64_t size, OrderStatIndex::Rank low,
                                OrderStatIndex::Rank high, bool equalValues) {
  PartitionCounts c;
  c.bot = low.less;
  c.eqMin = low.equal;
  c.eqMax = high.equal;
  c.top = size - high.less - high.equal;
  c.mid = equalValues ? 0 : high.less - low.less - low.equal;
  return c;
}

// Buffers y-values of the current equal-x run. Flushing happens when x
// changes, so the index only ever holds points with a different x than the
// one being processed.
class DelayedInserter {
 public:
  explicit DelayedInserter(OrderStatIndex& index) : index_(index) {}

  void push(double y) { pending_.push_back(y); }

  void flush() {
    for (double y : pending_) index_.insert(y);
    pending_.clear();
  }

 private:
  OrderStatIndex& index_;
  std::vector<double> pending_;
};

struct ForwardTally {
  Wide concordantQuarter = 0;  // 4 x totalConcordant
  Wide discordant = 0;         // before the reverse-pass correction
};

// Forward pass shared by the U and V forms. For V the outer loop also visits
// the last point and adds the repeated-index terms.
ForwardTally forwardPass(const SortedSample& s, bool vStatistic,
                         Instrumentation* stats) {
  const std::size_t n = s.size();
  const auto& x = s.x;
  const auto& y = s.y;

  OrderStatIndex index;
  DelayedInserter delayed(index);
  ForwardTally tally;

  const std::size_t last = vStatistic ? n : (n == 0 ? 0 : n - 1);
  for (std::size_t k = 0; k < last; ++k) {
    if (k != 0 && x[k - 1] != x[k]) delayed.flush();
    delayed.push(y[k]);

    const double yk = y[k];
    const OrderStatIndex::Rank rk = index.rank(yk);
    const std::int64_t size = index.size();

    if (vStatistic) {
      // Terms b_ijkk / 2 and b_iikk / 4.
      const std::int64_t top = size - rk.less - rk.equal;
      const std::int64_t bot = rk.less;
      tally.concordantQuarter += 2 * (Wide{choose2(top)} + choose2(bot)) + (top + bot);
    }

    for (std::size_t l = k + 1; l < n; ++l) {
      const double yl = y[l];
      const OrderStatIndex::Rank rl = index.rank(yl);
      const bool equal = yk == yl;
      const bool kLow = yk < yl;
      const PartitionCounts c =
          countsFromRanks(size, kLow || equal ? rk : rl, kLow || equal ? rl : rk, equal);
      const PairContribution pc = pairContribution(c, yk, yl);
      tally.concordantQuarter += 4 * Wide{pc.concordant};
      if (vStatistic) tally.concordantQuarter += 2 * (c.top + c.bot);  // b_iikl / 2
      tally.discordant += pc.discordantOvercounted;
    }
  }
  if (stats) stats->comparisons += index.comparisons();
  return tally;
}

TStarResult assemble(Kind kind, Path path, std::size_t n, Wide concordantQuarter,
                     Wide discordant) {
  TStarResult r;
  r.kind = kind;
  r.path = path;
  r.n = n;
  // 16 * (concordantQuarter / 4); concordantQuarter is a multiple of 4 for U
  // and the V weights resolve to integers once scaled by 16.
  r.concordantWeighted = 4 * concordantQuarter;
  r.discordantWeighted = 8 * discordant;
  r.denominator = kind == Kind::U ? denominatorU(n) : denominatorV(n);
  r.value = toDouble(r.numerator(), r.denominator);
  return r;
}

}  // namespace

PartitionCounts partitionCounts(const OrderStatIndex& index, double yk, double yl) {
  const double lo = std::min(yk, yl);
  const double hi = std::max(yk, yl);
  return countsFromRanks(index.size(), index.rank(lo), index.rank(hi), lo == hi);
}

PairContribution pairContribution(const PartitionCounts& c, double yk, double yl) {
  PairContribution pc;
  pc.concordant = choose2(c.top) + choose2(c.bot);
  if (yk != yl) {
    pc.discordantOvercounted = c.top * (c.mid + c.eqMin + c.bot) +
                               c.bot * (c.mid + c.eqMax) +
                               c.eqMin * (c.mid + c.eqMax) + c.eqMax * c.mid +
                               choose2(c.mid);
  }
  return pc;
}

std::int64_t countConcordantUntied(const SortedSample& s, Instrumentation* stats) {
  const std::size_t n = s.size();
  requireAtLeastFour(n);
  if (s.hasTiesX || s.hasTiesY) {
    throw Error(ErrorCode::Route,
                "untied algorithm called on data with ties; use the general path");
  }
  const auto& y = s.y;
  OrderStatIndex index;
  std::int64_t total = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const OrderStatIndex::Rank rk = index.rank(y[k]);
    const std::int64_t size = index.size();
    for (std::size_t l = k + 1; l < n; ++l) {
      const OrderStatIndex::Rank rl = index.rank(y[l]);
      // No ties: neither y_k nor y_l is stored, so "greater" is size - less.
      const std::int64_t numLess = std::min(rk.less, rl.less);
      const std::int64_t numGreater = size - std::max(rk.less, rl.less);
      total += choose2(numLess) + choose2(numGreater);
    }
    index.insert(y[k]);
  }
  if (stats) stats->comparisons += index.comparisons();
  return total;
}

Wide reversePassCorrection(const SortedSample& s, Instrumentation* stats) {
  const std::size_t n = s.size();
  const auto& x = s.x;
  const auto& y = s.y;
  if (n < 2) return 0;

  // Dense ids for y so we can track how many earlier indices share y_j.
  std::vector<double> distinct(y.begin(), y.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> id(n);
  std::vector<std::int64_t> remaining(distinct.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), y[i]) - distinct.begin());
    ++remaining[id[i]];
  }

  OrderStatIndex index;
  DelayedInserter delayed(index);
  Wide correction = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (j + 1 != n && x[j + 1] != x[j]) delayed.flush();
    delayed.push(y[j]);
    const std::int64_t equalBefore = --remaining[id[j]];
    if (equalBefore == 0 || index.empty()) continue;
    const OrderStatIndex::Rank r = index.rank(y[j]);
    const std::int64_t top = index.size() - r.less - r.equal;
    const std::int64_t bot = r.less;
    correction += Wide{equalBefore} * top * bot;
  }
  if (stats) stats->comparisons += index.comparisons();
  return correction;
}

TStarResult tStarUntiedU(const SortedSample& s, Instrumentation* stats) {
  const std::size_t n = s.size();
  const std::int64_t concordant = countConcordantUntied(s, stats);
  // Every quadruple is concordant or discordant.
  const Wide discordant = choose4(static_cast<std::int64_t>(n)) - concordant;
  return assemble(Kind::U, Path::Untied, n, 4 * Wide{concordant}, discordant);
}

TStarResult tStarGeneralU(const SortedSample& s, Instrumentation* stats) {
  requireAtLeastFour(s.size());
  const ForwardTally tally = forwardPass(s, false, stats);
  const Wide discordant = tally.discordant - reversePassCorrection(s, stats);
  return assemble(Kind::U, Path::General, s.size(), tally.concordantQuarter, discordant);
}

TStarResult tStarGeneralV(const SortedSample& s, Instrumentation* stats) {
  if (s.size() == 0) {
    throw Error(ErrorCode::Size, "V-statistic needs at least 1 observation");
  }
  const ForwardTally tally = forwardPass(s, true, stats);
  const Wide discordant = tally.discordant - reversePassCorrection(s, stats);
  return assemble(Kind::V, Path::GeneralV, s.size(), tally.concordantQuarter, discordant);
}

TStarResult tStar(const PairedSample& sample, Kind kind) {
  const SortedSample s = sortByX(sample);
  if (kind == Kind::V) return tStarGeneralV(s);
  if (!s.hasTiesX && !s.hasTiesY) return tStarUntiedU(s);
  return tStarGeneralU(s);
}

}  // namespace tstar::fast
