#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/plmap.hpp"
#include "patdyn/polynomial.hpp"
#include "patdyn/rational.hpp"
#include "patdyn/sharkovskii.hpp"

namespace patdyn {

// Certified spectral-radius enclosure and the entropy max{0, log rho}.
struct EntropyReport {
  Rational rho_lo;
  Rational rho_hi;
  bool exact = false;
  double entropy = 0.0;
  std::string method = "charpoly-bisect";

  double rho_lo_d() const { return to_double(rho_lo); }
  double rho_hi_d() const { return to_double(rho_hi); }
  double width() const { return to_double(rho_hi - rho_lo); }
};

namespace detail {

inline Rational rational_tol(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  return Rational(tol);  // exact binary value of the double
}

inline EntropyReport report_from_enclosure(const RootEnclosure& enc) {
  EntropyReport rep;
  rep.rho_lo = enc.lo;
  rep.rho_hi = enc.hi;
  rep.exact = enc.exact;
  const double mid = to_double(enc.midpoint());
  rep.entropy = mid > 1.0 ? std::log(mid) : 0.0;
  return rep;
}

}  // namespace detail

// Largest real root of the characteristic polynomial. For a 0/1 transition
// matrix this is the spectral radius: the matrix is nonnegative, so its
// spectral radius is an eigenvalue, and for a reducible matrix the
// characteristic polynomial factors over the diagonal blocks, so no
// component decomposition is needed. Roots of even multiplicity are handled
// by bisecting the square-free part.
inline EntropyReport spectral_radius(const TransitionMatrix& T, double tol = 1e-12) {
  const IntPolynomial p = char_poly(T);
  auto enc = largest_real_root(p, detail::rational_tol(tol));
  if (!enc) {
    // No real root at all: treat as rho = 0, entropy 0.
    EntropyReport rep;
    rep.rho_lo = 0;
    rep.rho_hi = 0;
    rep.exact = true;
    rep.entropy = 0.0;
    return rep;
  }
  return detail::report_from_enclosure(*enc);
}

// Entropy of the pattern: entropy of its connect-the-dots interval map, and
// equally of the uncoupled quasiperiodic skew-product carrying the same
// pattern. The period-1 pattern has an empty graph and entropy zero.
inline EntropyReport pattern_entropy(const Pattern& tau, double tol = 1e-12) {
  if (tau.period() == 1) {
    EntropyReport rep;
    rep.rho_lo = 1;
    rep.rho_hi = 1;
    rep.exact = true;
    rep.entropy = 0.0;
    rep.method = "empty-graph";
    return rep;
  }
  return spectral_radius(transition_matrix(build_graph(tau)), tol);
}

// Enclosure of lambda_q, the largest root of x^q - 2x^(q-2) - 1, for odd
// q >= 3. lambda_3 is the golden mean.
inline RootEnclosure lambda_root(int q, double tol = 1e-12) {
  auto enc = largest_real_root(lambda_poly(q), detail::rational_tol(tol));
  if (!enc) throw std::logic_error("lambda polynomial lost its real root");
  return *enc;
}

// log(lambda_q) / 2^n for m = 2^n q with q odd; zero when q = 1 (lambda_1 = 1).
inline double entropy_lower_bound(std::uint64_t m) {
  const SharkovskiiKey key = sharkovskii_decompose(m);
  if (key.odd == 1) return 0.0;
  const RootEnclosure enc = lambda_root(static_cast<int>(key.odd), 1e-15);
  return std::log(to_double(enc.midpoint())) / std::ldexp(1.0, key.exp2);
}

// Exact number of maximal monotone laps of the n-fold composition of the
// tau-linear map. The branches of f^n over one basic interval correspond to
// covering chains; their left-to-right order is a depth-first order that
// follows ascending targets under an orientation-preserving piece and
// descending targets (reversed) under an orientation-reversing one. Adjacent
// branches with equal derivative sign merge into a single lap, so it is
// enough to propagate, per vertex, the first sign, the last sign and the
// number of internal sign flips of that branch sequence.
inline BigInt lap_count(const Pattern& tau, int steps) {
  if (steps < 1) throw std::invalid_argument("lap count needs steps >= 1");
  const int n = tau.period();
  if (n == 1) return 1;
  const SignedGraph g = build_graph(tau);

  struct Run {
    Sign first;
    Sign last;
    BigInt flips;
  };
  const auto scaled = [](Run r, Sign s) {
    if (s == Sign::Minus) {
      r.first = r.first * Sign::Minus;
      r.last = r.last * Sign::Minus;
      std::swap(r.first, r.last);
    }
    return r;
  };

  std::vector<Run> runs;
  for (int k = 1; k <= n - 1; ++k) {
    runs.push_back(Run{g.vertex_sign(k), g.vertex_sign(k), BigInt(0)});
  }
  for (int s = 1; s < steps; ++s) {
    std::vector<Run> next;
    for (int k = 1; k <= n - 1; ++k) {
      const Sign sk = g.vertex_sign(k);
      std::vector<int> order = g.targets(k);
      if (sk == Sign::Minus) std::reverse(order.begin(), order.end());
      Run acc = scaled(runs[static_cast<std::size_t>(order[0] - 1)], sk);
      for (std::size_t t = 1; t < order.size(); ++t) {
        Run piece = scaled(runs[static_cast<std::size_t>(order[t] - 1)], sk);
        if (acc.last != piece.first) acc.flips += 1;
        acc.flips += piece.flips;
        acc.last = piece.last;
      }
      next.push_back(std::move(acc));
    }
    runs = std::move(next);
  }
  BigInt flips = runs[0].flips;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k - 1].last != runs[k].first) flips += 1;
    flips += runs[k].flips;
  }
  return flips + 1;
}

// The s closed walks of length `steps` through `vertex`, each with the exact
// domain of its branch of f^steps. The count always equals the corresponding
// diagonal entry of T^steps, and the branch domains have pairwise disjoint
// interiors, which is what makes the family an s-horseshoe certificate.
struct HorseshoeCertificate {
  int vertex = 0;
  int steps = 0;
  BigInt count;
  std::vector<std::vector<int>> walks;
  std::vector<RatInterval> branch_domains;
};

inline HorseshoeCertificate horseshoe_count(const SignedGraph& g, int vertex, int steps) {
  if (steps < 1) throw std::invalid_argument("horseshoe count needs steps >= 1");
  if (vertex < 1 || vertex > g.vertex_count()) {
    throw std::out_of_range("vertex out of range");
  }
  HorseshoeCertificate cert;
  cert.vertex = vertex;
  cert.steps = steps;

  std::vector<int> walk{vertex};
  const PLMap f(g.pattern());
  const auto dfs = [&](auto&& self, int at, int depth) -> void {
    if (depth == steps) {
      if (g.has_arrow(at, vertex)) {
        cert.walks.push_back(walk);
        cert.branch_domains.push_back(compose_along_chain(f, walk).domain);
      }
      return;
    }
    for (int j : g.targets(at)) {
      walk.push_back(j);
      self(self, j, depth + 1);
      walk.pop_back();
    }
  };
  dfs(dfs, vertex, 1);
  cert.count = BigInt(cert.walks.size());

  const auto tn = transition_matrix(g).power(steps);
  const BigInt& diag = tn[static_cast<std::size_t>(vertex - 1)][static_cast<std::size_t>(vertex - 1)];
  if (diag != cert.count) throw std::logic_error("walk enumeration disagrees with matrix power");
  return cert;
}

}  // namespace patdyn
