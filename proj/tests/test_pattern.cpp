#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "patdyn/entropy.hpp"
#include "patdyn/forcing.hpp"
#include "patdyn/pattern.hpp"

using namespace patdyn;

TEST_CASE("validate accepts single cycles and rejects the rest") {
  CHECK(Pattern::validate({2, 3, 1}).period() == 3);
  CHECK(Pattern::validate({1}).period() == 1);
  CHECK_THROWS_AS(Pattern::validate({2, 1, 4, 3}), InvalidPattern);  // two 2-cycles
  CHECK_THROWS_AS(Pattern::validate({1, 2}), InvalidPattern);        // identity
  CHECK_THROWS_AS(Pattern::validate({2, 2, 1}), InvalidPattern);     // repeated image
  CHECK_THROWS_AS(Pattern::validate({0, 1}), InvalidPattern);        // out of range
  CHECK_THROWS_AS(Pattern::validate({}), InvalidPattern);

  CHECK(Pattern::parse("2,3,1") == Pattern::validate({2, 3, 1}));
  CHECK_THROWS_AS(Pattern::parse("2,x,1"), InvalidPattern);
}

TEST_CASE("mirror reflects the pattern spatially") {
  CHECK(Pattern::validate({2, 3, 1}).mirror() == Pattern::validate({3, 1, 2}));
  CHECK(Pattern::validate({2, 1}).mirror() == Pattern::validate({2, 1}));
  CHECK(Pattern::validate({2, 3, 1}).mirror().mirror() == Pattern::validate({2, 3, 1}));
}

TEST_CASE("stefan pattern follows the fixed spiral convention") {
  CHECK(stefan_pattern(3) == Pattern::validate({2, 3, 1}));
  CHECK(stefan_pattern(5) == Pattern::validate({3, 5, 4, 2, 1}));
  CHECK(stefan_pattern(7) == Pattern::validate({4, 7, 6, 5, 3, 2, 1}));
  CHECK_THROWS_AS(stefan_pattern(1), std::invalid_argument);
  CHECK_THROWS_AS(stefan_pattern(4), std::invalid_argument);

  // tau(ceil(q/2)) = ceil(q/2) + 1
  for (int q : {3, 5, 7, 9, 11}) {
    const auto tau = stefan_pattern(q);
    const int c = (q + 1) / 2;
    CHECK(tau.image_of(c) == c + 1);
  }
}

TEST_CASE("stefan cycles minimize entropy over their period") {
  // Brute force over every cyclic pattern of the period: the smallest
  // entropy must be the lambda_q rate and the stefan cycle must attain it.
  for (int q : {3, 5}) {
    const double target = std::log(to_double(lambda_root(q).midpoint()));
    double best = 1e9;
    for (const Pattern& tau : all_patterns(q)) {
      best = std::min(best, pattern_entropy(tau).entropy);
    }
    CHECK(std::abs(best - target) < 1e-9);
    CHECK(std::abs(pattern_entropy(stefan_pattern(q)).entropy - target) < 1e-9);
  }
}

TEST_CASE("doubling doubles the period and produces a cycle") {
  CHECK(double_pattern(Pattern::validate({1})) == Pattern::validate({2, 1}));
  CHECK(double_pattern(Pattern::validate({2, 1})) == Pattern::validate({3, 4, 2, 1}));
  CHECK(double_pattern(Pattern::validate({2, 3, 1})) ==
        Pattern::validate({4, 5, 6, 2, 3, 1}));
  for (const Pattern& tau : all_patterns(4)) {
    const Pattern d = double_pattern(tau);
    CHECK(d.period() == 8);
  }
}

TEST_CASE("doubling halves the entropy for every pattern of period <= 5") {
  for (int m = 1; m <= 5; ++m) {
    for (const Pattern& tau : all_patterns(m)) {
      const double h = pattern_entropy(tau).entropy;
      const double hd = pattern_entropy(double_pattern(tau)).entropy;
      REQUIRE(std::abs(hd - h / 2) < 1e-9);
    }
  }
}

TEST_CASE("doubling a doubled fixed point stays at entropy zero") {
  Pattern tau = Pattern::validate({1});
  for (int k = 0; k < 3; ++k) {
    tau = double_pattern(tau);
    CHECK(pattern_entropy(tau).entropy == 0.0);
  }
  CHECK(tau.period() == 8);
}

TEST_CASE("there are (m-1)! patterns of period m") {
  std::size_t factorial = 1;
  for (int m = 1; m <= 6; ++m) {
    if (m > 1) factorial *= static_cast<std::size_t>(m - 1);
    const auto pats = all_patterns(m);
    CHECK(pats.size() == factorial);
    std::set<Pattern> dedup(pats.begin(), pats.end());
    CHECK(dedup.size() == pats.size());
  }
}
