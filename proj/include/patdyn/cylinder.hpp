#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/plmap.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

// Circle coordinate for the quasiperiodic forcing; quad precision (113-bit
// mantissa). The x-dynamics of an uncoupled map never depends on theta, so
// this precision only affects trajectory reporting.
using Theta = boost::multiprecision::cpp_bin_float_quad;

inline Theta default_omega() {
  // (sqrt(5) - 1) / 2, irrational rotation number.
  return (sqrt(Theta(5)) - 1) / 2;
}

inline Theta wrap_unit(Theta t) {
  t -= floor(t);
  if (t >= 1) t -= 1;
  if (t < 0) t += 1;
  return t;
}

// A horizontal strip S^1 x [lo, hi] of the cylinder over [1, n]; a circle
// when the fiber interval degenerates to a point. Horizontal bands are the
// periodic strips of uncoupled skew-products.
struct HorizontalBand {
  RatInterval x;

  bool is_circle() const { return x.is_point(); }

  friend bool operator==(const HorizontalBand& a, const HorizontalBand& b) {
    return a.x == b.x;
  }
};

// F(theta, x) = (theta + omega mod 1, f_tau(x)): the rigid irrational
// rotation on the circle, uncoupled from the tau-linear fiber map.
class UncoupledSkewProduct {
 public:
  explicit UncoupledSkewProduct(Pattern tau)
      : UncoupledSkewProduct(std::move(tau), default_omega()) {}

  UncoupledSkewProduct(Pattern tau, Theta omega)
      : fiber_(std::move(tau)), omega_(std::move(omega)) {
    if (omega_ <= 0 || omega_ >= 1) throw std::invalid_argument("omega must lie in (0,1)");
  }

  const Pattern& pattern() const { return fiber_.pattern(); }
  const PLMap& fiber() const { return fiber_; }
  const Theta& omega() const { return omega_; }

  // (theta + k*omega mod 1, f^k(x)); the x part stays exact.
  std::pair<Theta, Rational> iterate(const Theta& theta, const Rational& x, int steps) const {
    if (steps < 0) throw std::invalid_argument("iterate needs steps >= 0");
    Rational xr = fiber_.iterate(x, steps);
    Theta th = wrap_unit(wrap_unit(theta) + steps * omega_);
    return {std::move(th), std::move(xr)};
  }

 private:
  PLMap fiber_;
  Theta omega_;
};

// The n horizontal circles S^1 x {i}: a periodic orbit of strips of F_tau
// with pattern tau, spatially labelled.
inline std::vector<HorizontalBand> horizontal_orbit(const Pattern& tau) {
  std::vector<HorizontalBand> bands;
  bands.reserve(static_cast<std::size_t>(tau.period()));
  for (int i = 1; i <= tau.period(); ++i) {
    bands.push_back(HorizontalBand{RatInterval{Rational(i), Rational(i)}});
  }
  return bands;
}

namespace detail {

inline void require_ordered_bands(const std::vector<HorizontalBand>& bands) {
  if (bands.empty()) throw std::invalid_argument("no bands");
  for (const auto& b : bands) {
    if (b.x.lo > b.x.hi) throw std::invalid_argument("band with inverted fiber interval");
  }
  for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
    if (!(bands[i].x.hi < bands[i + 1].x.lo)) {
      throw std::invalid_argument("bands must be pairwise disjoint and ordered");
    }
  }
}

}  // namespace detail

// Recovers the pattern of an F-permuted family of horizontal bands. Each
// band owns an exact per-band periodic point of the fiber map (for circles,
// its level; otherwise a fixed point of an affine branch of f^n inside the
// fiber interval); the permutation is read off where those points map.
inline Pattern extract_pattern_from_bands(const UncoupledSkewProduct& F,
                                          const std::vector<HorizontalBand>& bands) {
  detail::require_ordered_bands(bands);
  const int n = static_cast<int>(bands.size());
  const PLMap& f = F.fiber();

  std::vector<Rational> rep;
  rep.reserve(static_cast<std::size_t>(n));
  for (const HorizontalBand& band : bands) {
    if (band.is_circle()) {
      Rational p = band.x.lo;
      if (f.iterate(p, n) != p) {
        throw std::invalid_argument("NotPermuted: circle level " + rational_string(p) +
                                    " is not " + std::to_string(n) + "-periodic");
      }
      rep.push_back(std::move(p));
      continue;
    }
    bool found = false;
    for (const ChainBranch& br : compose_pieces(f, band.x, n)) {
      const FixedPointResult fp = fixed_point(br.map, br.domain);
      if (std::holds_alternative<UniquePoint>(fp)) {
        rep.push_back(std::get<UniquePoint>(fp).x);
        found = true;
        break;
      }
      if (std::holds_alternative<WholeInterval>(fp)) {
        rep.push_back(br.domain.midpoint());
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("NotPermuted: band [" + rational_string(band.x.lo) + "," +
                                  rational_string(band.x.hi) + "] holds no " +
                                  std::to_string(n) + "-periodic point");
    }
  }

  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Rational image = f.eval(rep[static_cast<std::size_t>(i)]);
    int target = 0;
    for (int j = 0; j < n; ++j) {
      if (bands[static_cast<std::size_t>(j)].x.contains(image)) {
        target = j + 1;
        break;
      }
    }
    if (target == 0) {
      throw std::invalid_argument("NotPermuted: image " + rational_string(image) +
                                  " misses every band");
    }
    images[static_cast<std::size_t>(i)] = target;
  }
  try {
    return Pattern::validate(std::move(images));
  } catch (const InvalidPattern& e) {
    throw std::invalid_argument(std::string("NotPermuted: ") + e.what());
  }
}

// The signed Markov graph of the basic bands between consecutive strips of
// the orbit. For an uncoupled map the covers of a horizontal band are
// horizontal circles, so the covering conditions reduce to exact fiber
// inequalities; the result always coincides with the graph of the pattern.
inline std::vector<SignedArrow> band_markov_graph(const UncoupledSkewProduct& F,
                                                  const std::vector<HorizontalBand>& bands) {
  detail::require_ordered_bands(bands);
  const int n = static_cast<int>(bands.size());
  const PLMap& f = F.fiber();

  // Gap g_k lies between the top of band k and the bottom of band k+1.
  std::vector<RatInterval> gaps;
  for (int k = 0; k + 1 < n; ++k) {
    gaps.push_back(RatInterval{bands[static_cast<std::size_t>(k)].x.hi,
                               bands[static_cast<std::size_t>(k + 1)].x.lo});
  }
  std::vector<SignedArrow> arrows;
  for (int i = 0; i < n - 1; ++i) {
    const Rational bottom_img = f.eval(gaps[static_cast<std::size_t>(i)].lo);
    const Rational top_img = f.eval(gaps[static_cast<std::size_t>(i)].hi);
    for (int j = 0; j < n - 1; ++j) {
      const RatInterval& target = gaps[static_cast<std::size_t>(j)];
      if (bottom_img <= target.lo && top_img >= target.hi) {
        arrows.push_back(SignedArrow{i + 1, j + 1, Sign::Plus});
      } else if (bottom_img >= target.hi && top_img <= target.lo) {
        arrows.push_back(SignedArrow{i + 1, j + 1, Sign::Minus});
      }
    }
  }
  return arrows;
}

}  // namespace patdyn
