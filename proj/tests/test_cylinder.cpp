#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <utility>
#include <vector>

#include "patdyn/cylinder.hpp"
#include "patdyn/forcing.hpp"

using namespace patdyn;

TEST_CASE("horizontal orbit is the family of circles at the breakpoints") {
  const auto bands = horizontal_orbit(Pattern::validate({2, 3, 1}));
  REQUIRE(bands.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(bands[static_cast<std::size_t>(i)].is_circle());
    CHECK(bands[static_cast<std::size_t>(i)].x.lo == i + 1);
  }
  CHECK(horizontal_orbit(Pattern::validate({1})).size() == 1);
}

TEST_CASE("iterate keeps the fiber exact and rotates the base") {
  const UncoupledSkewProduct F(Pattern::validate({2, 1}), Theta(0.375));
  const auto [t0, x0] = F.iterate(Theta(0.5), Rational(3, 2), 0);
  CHECK(x0 == Rational(3, 2));
  CHECK(t0 == Theta(0.5));

  const auto [t2, x2] = F.iterate(Theta(0.5), Rational(3, 2), 2);
  CHECK(x2 == Rational(3, 2));  // the involution fixes 3/2
  CHECK(t2 == Theta(0.25));     // 0.5 + 2 * 0.375 mod 1

  CHECK_THROWS_AS(F.iterate(Theta(0), Rational(5), 1), std::domain_error);
}

TEST_CASE("the fiber reached after k steps never depends on theta") {
  const UncoupledSkewProduct F(Pattern::validate({2, 3, 1}));
  const Rational x(5, 4);
  for (int k = 0; k <= 10; ++k) {
    const Rational expect = F.fiber().iterate(x, k);
    for (int s = 0; s < 100; ++s) {
      const Theta theta = Theta(s) / 100;
      const auto [t, xk] = F.iterate(theta, x, k);
      REQUIRE(xk == expect);
    }
  }
}

TEST_CASE("pattern extraction round-trips the horizontal orbit, periods <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (const Pattern& tau : all_patterns(m)) {
      const UncoupledSkewProduct F(tau);
      REQUIRE(extract_pattern_from_bands(F, horizontal_orbit(tau)) == tau);
    }
  }
}

TEST_CASE("interval bands around the orbit points still carry the pattern") {
  const Pattern tau = stefan_pattern(3);
  const UncoupledSkewProduct F(tau);
  std::vector<HorizontalBand> bands;
  for (int i = 1; i <= 3; ++i) {
    const Rational lo = std::max(Rational(1), Rational(4 * i - 1, 4));
    const Rational hi = std::min(Rational(3), Rational(4 * i + 1, 4));
    bands.push_back(HorizontalBand{RatInterval{lo, hi}});
  }
  CHECK(extract_pattern_from_bands(F, bands) == tau);

  const UncoupledSkewProduct swap2(Pattern::validate({2, 1}));
  const std::vector<HorizontalBand> two{HorizontalBand{RatInterval{Rational(1), Rational(5, 4)}},
                                        HorizontalBand{RatInterval{Rational(7, 4), Rational(2)}}};
  CHECK(extract_pattern_from_bands(swap2, two) == Pattern::validate({2, 1}));
}

TEST_CASE("extraction rejects families that are not permuted") {
  const UncoupledSkewProduct F(Pattern::validate({2, 3, 1}));
  // Circles at non-periodic levels.
  const std::vector<HorizontalBand> bad{HorizontalBand{RatInterval{Rational(3, 2), Rational(3, 2)}},
                                        HorizontalBand{RatInterval{Rational(2), Rational(2)}}};
  CHECK_THROWS_AS(extract_pattern_from_bands(F, bad), std::invalid_argument);

  // Unsorted bands.
  auto bands = horizontal_orbit(F.pattern());
  std::swap(bands[0], bands[1]);
  CHECK_THROWS_AS(extract_pattern_from_bands(F, bands), std::invalid_argument);
}

TEST_CASE("bands of the horizontal orbit are strictly ordered by level") {
  const auto bands = horizontal_orbit(stefan_pattern(5));
  for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
    CHECK(bands[i].x.hi < bands[i + 1].x.lo);
  }
}

TEST_CASE("the basic-band graph of the horizontal orbit equals the pattern graph") {
  for (int m = 2; m <= 6; ++m) {
    for (const Pattern& tau : all_patterns(m)) {
      const UncoupledSkewProduct F(tau);
      const auto band_arrows = band_markov_graph(F, horizontal_orbit(tau));
      REQUIRE(band_arrows == build_graph(tau).arrows());
    }
  }
}

TEST_CASE("omega must be an interior rotation number") {
  CHECK_THROWS_AS(UncoupledSkewProduct(Pattern::validate({2, 1}), Theta(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(UncoupledSkewProduct(Pattern::validate({2, 1}), Theta(1)),
                  std::invalid_argument);
  const UncoupledSkewProduct F(Pattern::validate({2, 1}));
  CHECK(F.omega() > 0.61);
  CHECK(F.omega() < 0.62);
}
