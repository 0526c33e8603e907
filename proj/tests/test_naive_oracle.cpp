#include <doctest.h>

#include <algorithm>
#include <random>

#include "error.hpp"
#include "naive_oracle.hpp"
#include "support.hpp"

using namespace tstar;
using namespace tstar::testing;

TEST_CASE("naiveU on single quadruples") {
  const auto mono = naive::naiveU(PairedSample({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  CHECK(mono.numerator() == 16);
  CHECK(mono.denominator == 24);
  CHECK(mono.value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const auto disc = naive::naiveU(PairedSample({{1, 1}, {2, 4}, {3, 2}, {4, 3}}));
  CHECK(disc.numerator() == -8);
  CHECK(disc.value == -1.0 / 3.0);

  // 2x2 grid: separable in x, y middle order statistics are 1 and 2, so the
  // quadruple is discordant.
  const auto grid = naive::naiveU(PairedSample({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(grid.numerator() == -8);

  // Middle x values tied: inseparable.
  const auto flat = naive::naiveU(PairedSample({{1, 1}, {2, 2}, {2, 1}, {3, 2}}));
  CHECK(flat.numerator() == 0);
  CHECK(flat.value == 0.0);
}

TEST_CASE("naiveU rejects n < 4") {
  try {
    (void)naive::naiveU(PairedSample({{1, 1}, {2, 2}, {3, 3}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Size);
  }
}

TEST_CASE("naiveV small cases") {
  CHECK(naive::naiveV(PairedSample({{3, 3}})).value == 0.0);
  std::vector<Point> same(7, Point{2.5, -1.0});
  CHECK(naive::naiveV(PairedSample(same)).numerator() == 0);

  // Frozen from a direct enumeration over all 256 ordered tuples.
  const auto mono = naive::naiveV(PairedSample({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  CHECK(mono.numerator() == 104);
  CHECK(mono.denominator == 256);
  CHECK(naive::naiveV(PairedSample({{1, 1}, {2, 2}})).numerator() == 4);
  CHECK(naive::naiveV(PairedSample({{1, 1}, {2, 2}, {3, 3}})).numerator() == 28);
}

TEST_CASE("classification route equals the literal U kernel sum") {
  Engine rng(5);
  for (int t = 0; t < 120; ++t) {
    const auto regime = static_cast<Regime>(t % 6);
    const auto s = randomSample(rng, uniformSize(rng, 4, 12), regime);
    const auto viaClasses = naive::naiveU(s);
    const auto literal = naive::enumerateU(s);
    CAPTURE(toString(regime));
    REQUIRE(viaClasses.numerator() == literal.numerator);
    CHECK(viaClasses.denominator == literal.denominator);
    CHECK(viaClasses.value == literal.value);
  }
}

TEST_CASE("collapsed V sum equals the literal n^4 enumeration") {
  Engine rng(6);
  for (int t = 0; t < 120; ++t) {
    const auto regime = static_cast<Regime>(t % 6);
    const auto s = randomSample(rng, uniformSize(rng, 1, 10), regime);
    CAPTURE(toString(regime));
    REQUIRE(naive::naiveV(s).numerator() == naive::enumerateV(s).numerator);
  }
}

TEST_CASE("naiveU range and permutation invariance") {
  Engine rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto s = randomSample(rng, uniformSize(rng, 4, 20), static_cast<Regime>(t % 6));
    const auto u = naive::naiveU(s);
    CHECK(u.value >= -1.0 / 3.0);
    CHECK(u.value <= 2.0 / 3.0);

    auto pts = s.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    const PairedSample shuffled(pts);
    CHECK(naive::naiveU(shuffled).numerator() == u.numerator());
    CHECK(naive::naiveV(shuffled).numerator() == naive::naiveV(s).numerator());
  }
}
