#include <catch2/catch_amalgamated.hpp>

#include "patdyn/forcing.hpp"
#include "patdyn/plmap.hpp"

using namespace patdyn;

TEST_CASE("build interpolates the breakpoints with integer affine pieces") {
  const PLMap f(Pattern::validate({2, 3, 1}));
  CHECK(f.piece(1).slope == 1);
  CHECK(f.piece(2).slope == -2);
  CHECK(f.piece(2).intercept == 7);

  const PLMap inv(Pattern::validate({2, 1}));
  CHECK(inv.piece(1).slope == -1);
  CHECK(inv.piece(1).intercept == 3);

  const PLMap point(Pattern::validate({1}));
  CHECK(point.eval(Rational(1)) == 1);
}

TEST_CASE("eval matches by-hand values and rejects points outside the domain") {
  const PLMap f(Pattern::validate({2, 3, 1}));
  CHECK(f.eval(Rational(3, 2)) == Rational(5, 2));
  CHECK(f.eval(Rational(2)) == 3);
  CHECK(f.eval(Rational(7, 3)) == Rational(7, 3));  // the interior fixed point
  CHECK_THROWS_AS(f.eval(Rational(7, 2)), std::domain_error);
  CHECK_THROWS_AS(f.eval(Rational(0)), std::domain_error);

  const PLMap inv(Pattern::validate({2, 1}));
  CHECK(inv.eval(Rational(3, 2)) == Rational(3, 2));
}

TEST_CASE("eval hits the pattern at every breakpoint, all periods up to 7") {
  for (int m = 1; m <= 7; ++m) {
    for (const Pattern& tau : all_patterns(m)) {
      const PLMap f(tau);
      for (int i = 1; i <= m; ++i) {
        REQUIRE(f.eval(Rational(i)) == tau.image_of(i));
      }
      // Continuity at the interior breakpoints: adjacent pieces agree.
      for (int i = 2; i <= m - 1; ++i) {
        REQUIRE(f.piece(i - 1)(Rational(i)) == f.piece(i)(Rational(i)));
      }
    }
  }
}

TEST_CASE("compose_along_chain multiplies slopes and pulls the domain back") {
  const PLMap f(Pattern::validate({2, 3, 1}));

  const auto br = compose_along_chain(f, {2, 2, 1});
  CHECK(br.map.slope == 4);

  const auto single = compose_along_chain(f, {2});
  CHECK(single.map == f.piece(2));
  CHECK((single.domain == RatInterval{Rational(2), Rational(3)}));

  const PLMap inv(Pattern::validate({2, 1}));
  const auto invsq = compose_along_chain(inv, {1, 1});
  CHECK(invsq.map.slope == 1);
  CHECK(invsq.map.intercept == 0);
  CHECK((invsq.domain == RatInterval{Rational(1), Rational(2)}));

  CHECK_THROWS_AS(compose_along_chain(f, {1, 1}), std::invalid_argument);  // no arrow 1 -> 1
}

TEST_CASE("chain slopes are products of piece slopes with magnitude >= 1") {
  for (int m = 2; m <= 5; ++m) {
    for (const Pattern& tau : all_patterns(m)) {
      const PLMap f(tau);
      // every depth-3 covering chain
      for (int a = 1; a <= m - 1; ++a) {
        for (int b = 1; b <= m - 1; ++b) {
          if (!covers(tau, a, b)) continue;
          for (int c = 1; c <= m - 1; ++c) {
            if (!covers(tau, b, c)) continue;
            const auto br = compose_along_chain(f, {a, b, c});
            Rational expect = f.piece(a).slope * f.piece(b).slope;
            expect *= f.piece(c).slope;
            REQUIRE(br.map.slope == expect);
            REQUIRE((br.map.slope >= 1 || br.map.slope <= -1));
            REQUIRE(br.domain.lo >= a);
            REQUIRE(br.domain.hi <= a + 1);
          }
        }
      }
    }
  }
}

TEST_CASE("fixed_point resolves the three solution shapes") {
  // Unique point: the slope-4 branch of f^2 over the chain (2,2).
  const PLMap f(Pattern::validate({2, 3, 1}));
  const auto br = compose_along_chain(f, {2, 2});
  CHECK(br.map.slope == 4);
  const auto fp = fixed_point(br.map, br.domain);
  REQUIRE(std::holds_alternative<UniquePoint>(fp));
  CHECK(std::get<UniquePoint>(fp).x == Rational(7, 3));

  // Identity on [1,2]: every point fixed.
  CHECK(std::holds_alternative<WholeInterval>(
      fixed_point(AffineMap{Rational(1), Rational(0)}, RatInterval{Rational(1), Rational(2)})));

  // Parallel to the diagonal: nothing fixed.
  CHECK(std::holds_alternative<NoFixedPoint>(
      fixed_point(AffineMap{Rational(1), Rational(1, 3)}, RatInterval{Rational(1), Rational(2)})));

  // Unique point outside the window: nothing fixed inside.
  CHECK(std::holds_alternative<NoFixedPoint>(
      fixed_point(AffineMap{Rational(4), Rational(-3)}, RatInterval{Rational(2), Rational(3)})));
}

TEST_CASE("compose_pieces tiles the window with exact monotone branches") {
  const PLMap f(Pattern::validate({2, 3, 1}));
  const auto pieces = compose_pieces(f, f.domain(), 2);
  REQUIRE(pieces.size() == 3);
  CHECK((pieces[0].domain == RatInterval{Rational(1), Rational(2)}));
  CHECK(pieces[0].map.slope == -2);
  CHECK((pieces[1].domain == RatInterval{Rational(2), Rational(5, 2)}));
  CHECK(pieces[1].map.slope == 4);
  CHECK((pieces[2].domain == RatInterval{Rational(5, 2), Rational(3)}));
  CHECK(pieces[2].map.slope == -2);

  // Branch values agree with direct iteration at interior sample points.
  for (const auto& br : pieces) {
    const Rational mid = br.domain.midpoint();
    REQUIRE(br.map(mid) == f.iterate(mid, 2));
  }
}
