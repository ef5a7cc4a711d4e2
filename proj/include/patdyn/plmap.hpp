#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "patdyn/pattern.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

// x -> slope * x + intercept, exact.
struct AffineMap {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& x) const {
    Rational y = slope * x;
    y += intercept;
    return y;
  }

  // this o inner
  AffineMap after(const AffineMap& inner) const {
    AffineMap out;
    out.slope = slope * inner.slope;
    out.intercept = slope * inner.intercept;
    out.intercept += intercept;
    return out;
  }

  // Preimage of y under this map; slope must be nonzero.
  Rational invert(const Rational& y) const {
    Rational d = y - intercept;
    d /= slope;
    return d;
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

inline AffineMap affine_identity() { return AffineMap{Rational(1), Rational(0)}; }

// Closed interval [lo, hi] with exact endpoints, lo <= hi.
struct RatInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
  Rational midpoint() const {
    Rational m = lo + hi;
    m /= 2;
    return m;
  }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline RatInterval make_interval(Rational a, Rational b) {
  if (a > b) std::swap(a, b);
  return RatInterval{std::move(a), std::move(b)};
}

// Image of a closed interval under an affine map (orientation normalized).
inline RatInterval image_of(const AffineMap& a, const RatInterval& d) {
  return make_interval(a(d.lo), a(d.hi));
}

// Solution set of a(x) = x restricted to a closed interval.
struct UniquePoint {
  Rational x;
};
struct WholeInterval {};
struct NoFixedPoint {};
using FixedPointResult = std::variant<UniquePoint, WholeInterval, NoFixedPoint>;

inline FixedPointResult fixed_point(const AffineMap& a, const RatInterval& domain) {
  if (a.slope == 1) {
    if (a.intercept == 0) return WholeInterval{};
    return NoFixedPoint{};
  }
  Rational x = a.intercept;
  x /= Rational(1) - a.slope;
  if (domain.contains(x)) return UniquePoint{std::move(x)};
  return NoFixedPoint{};
}

// The tau-linear interval map on [1, n]: f(i) = tau(i) at the integer
// breakpoints with f affine on each [i, i+1]. Every slope and intercept is an
// integer, so iterates stay in exact rational arithmetic throughout.
class PLMap {
 public:
  explicit PLMap(Pattern tau) : tau_(std::move(tau)) {
    const int n = tau_.period();
    pieces_.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int k = 1; k <= n - 1; ++k) {
      const int a = tau_.image_of(k);
      const int b = tau_.image_of(k + 1);
      AffineMap piece;
      piece.slope = b - a;
      piece.intercept = Rational(a) - piece.slope * k;
      pieces_.push_back(std::move(piece));
    }
  }

  const Pattern& pattern() const { return tau_; }
  int period() const { return tau_.period(); }

  // The affine piece on the basic interval [k, k+1], 1 <= k <= n-1.
  const AffineMap& piece(int k) const {
    if (k < 1 || k > period() - 1) throw std::out_of_range("basic interval index out of range");
    return pieces_[static_cast<std::size_t>(k - 1)];
  }

  RatInterval basic_interval(int k) const {
    if (k < 1 || k > period() - 1) throw std::out_of_range("basic interval index out of range");
    return RatInterval{Rational(k), Rational(k + 1)};
  }

  RatInterval domain() const { return RatInterval{Rational(1), Rational(period())}; }

  Rational eval(const Rational& x) const {
    const int n = period();
    if (x < 1 || x > n) {
      throw std::domain_error("OutOfDomain: x = " + rational_string(x) + " outside [1," +
                              std::to_string(n) + "]");
    }
    if (n == 1) return x;
    int k = static_cast<int>(numerator(x) / denominator(x));  // floor for x >= 1
    if (k >= n) k = n - 1;
    return piece(k)(x);
  }

  Rational iterate(Rational x, int steps) const {
    if (steps < 0) throw std::invalid_argument("iterate needs steps >= 0");
    for (int i = 0; i < steps; ++i) x = eval(x);
    return x;
  }

 private:
  Pattern tau_;
  std::vector<AffineMap> pieces_;
};

inline PLMap build_plmap(Pattern tau) { return PLMap(std::move(tau)); }

// True when the basic interval [to, to+1] is contained in the image of the
// piece on [from, from+1]; this is exactly the signed-covering relation of
// the Markov graph, decided from the endpoint images alone.
inline bool covers(const Pattern& tau, int from, int to) {
  const int a = tau.image_of(from);
  const int b = tau.image_of(from + 1);
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  return lo <= to && to <= hi - 1;
}

// An affine branch of an iterate of f together with its exact domain.
struct ChainBranch {
  AffineMap map;
  RatInterval domain;
};

// The branch of f^m (m = chain length) whose i-th iterate stays inside the
// basic interval chain[i]. Consecutive chain entries must be covering arrows,
// otherwise the requested branch is empty and the chain is rejected.
inline ChainBranch compose_along_chain(const PLMap& f, const std::vector<int>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  const int n = f.period();
  for (int k : chain) {
    if (k < 1 || k > n - 1) throw std::out_of_range("chain vertex out of range");
  }
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    if (!covers(f.pattern(), chain[t], chain[t + 1])) {
      throw std::invalid_argument("BrokenChain: no covering arrow " + std::to_string(chain[t]) +
                                  " -> " + std::to_string(chain[t + 1]));
    }
  }
  AffineMap branch = f.piece(chain[0]);
  for (std::size_t t = 1; t < chain.size(); ++t) {
    branch = f.piece(chain[t]).after(branch);
  }
  // Domain by exact pullback: the last interval pulled back through each
  // earlier piece. Covering guarantees the pullback stays inside the chain.
  RatInterval dom = f.basic_interval(chain.back());
  for (std::size_t t = chain.size() - 1; t-- > 0;) {
    const AffineMap& p = f.piece(chain[t]);
    dom = make_interval(p.invert(dom.lo), p.invert(dom.hi));
  }
  return ChainBranch{std::move(branch), std::move(dom)};
}

// Exact monotone-branch decomposition of f^steps restricted to a window.
// Branches are returned left to right; they tile the window and each one is
// a single affine map on its domain.
inline std::vector<ChainBranch> compose_pieces(const PLMap& f, const RatInterval& window,
                                               int steps) {
  if (steps < 0) throw std::invalid_argument("compose_pieces needs steps >= 0");
  if (!f.domain().contains(window.lo) || !f.domain().contains(window.hi)) {
    throw std::domain_error("window outside the map domain");
  }
  std::vector<ChainBranch> branches{ChainBranch{affine_identity(), window}};
  const int n = f.period();
  for (int s = 0; s < steps; ++s) {
    std::vector<ChainBranch> next;
    next.reserve(branches.size());
    for (const ChainBranch& br : branches) {
      const RatInterval img = image_of(br.map, br.domain);
      // Integer breakpoints strictly inside the image split the branch.
      std::vector<Rational> cuts;
      for (int b = 2; b <= n - 1; ++b) {
        Rational rb(b);
        if (img.lo < rb && rb < img.hi) cuts.push_back(br.map.invert(rb));
      }
      std::sort(cuts.begin(), cuts.end());
      std::vector<Rational> ends;
      ends.push_back(br.domain.lo);
      for (auto& c : cuts) ends.push_back(std::move(c));
      ends.push_back(br.domain.hi);
      for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        RatInterval sub{ends[i], ends[i + 1]};
        Rational mid = br.map(sub.midpoint());
        int k = static_cast<int>(numerator(mid) / denominator(mid));
        if (k >= n) k = n - 1;
        if (k < 1) k = 1;
        next.push_back(ChainBranch{f.piece(k).after(br.map), std::move(sub)});
      }
    }
    branches = std::move(next);
  }
  return branches;
}

}  // namespace patdyn
