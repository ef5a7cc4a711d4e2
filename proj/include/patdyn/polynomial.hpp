#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patdyn/markov_graph.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

// Integer polynomial, ascending coefficients: coeffs[i] * x^i.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  int degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d >= 0 && coeffs[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      acc *= x;
      acc += Rational(coeffs[i]);
    }
    return acc;
  }

  int sign_at(const Rational& x) const {
    Rational v = (*this)(x);
    if (v == 0) return 0;
    return v > 0 ? 1 : -1;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a, y = b;
    x.normalize();
    y.normalize();
    return x.coeffs == y.coeffs;
  }

  std::string to_string() const {
    if (degree() < 0) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = coeffs[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      BigInt mag = abs(c);
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }
};

inline IntPolynomial make_poly(std::vector<long long> coeffs) {
  IntPolynomial p;
  p.coeffs.assign(coeffs.begin(), coeffs.end());
  p.normalize();
  return p;
}

inline IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() < 0 || b.degree() < 0) return IntPolynomial{};
  IntPolynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  out.normalize();
  return out;
}

inline IntPolynomial derivative(const IntPolynomial& p) {
  IntPolynomial out;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    out.coeffs.push_back(p.coeffs[i] * static_cast<long long>(i));
  }
  out.normalize();
  return out;
}

// x^q - 2 x^(q-2) - 1 for odd q >= 3; its largest root is the growth rate of
// the minimal-entropy cycle of period q.
inline IntPolynomial lambda_poly(int q) {
  if (q < 3 || q % 2 == 0) {
    throw std::invalid_argument("lambda polynomial needs odd q >= 3, got " + std::to_string(q));
  }
  IntPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(q + 1), BigInt(0));
  p.coeffs[static_cast<std::size_t>(q)] = 1;
  p.coeffs[static_cast<std::size_t>(q - 2)] = -2;
  p.coeffs[0] = -1;
  return p;
}

// Exact characteristic polynomial det(xI - T) by the trace recurrence of
// Faddeev-LeVerrier; every division is exact over the integers.
inline IntPolynomial char_poly(const TransitionMatrix& T) {
  const int k = T.size();
  IntPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(k + 1), BigInt(0));
  p.coeffs[static_cast<std::size_t>(k)] = 1;
  if (k == 0) return p;

  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = T.entry(i + 1, j + 1);
    }
  }
  Mat m(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  for (int step = 1; step <= k; ++step) {
    Mat am(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
      for (int l = 0; l < k; ++l) {
        const BigInt& ail = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (ail == 0) continue;
        for (int j = 0; j < k; ++j) {
          am[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              ail * m[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
        }
      }
    }
    BigInt tr = 0;
    for (int i = 0; i < k; ++i) tr += am[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    BigInt c = -tr / step;  // exact
    p.coeffs[static_cast<std::size_t>(k - step)] = c;
    for (int i = 0; i < k; ++i) am[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c;
    m = std::move(am);
  }
  return p;
}

namespace detail {

// Rational-coefficient polynomials, ascending, used only for the Sturm chain.
using RatPoly = std::vector<Rational>;

inline void rp_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_from(const IntPolynomial& p) {
  RatPoly out;
  for (const BigInt& c : p.coeffs) out.emplace_back(c);
  rp_normalize(out);
  return out;
}

inline RatPoly rp_derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
  rp_normalize(out);
  return out;
}

inline Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

// Remainder of a by b; b nonzero.
inline RatPoly rp_remainder(RatPoly a, const RatPoly& b) {
  rp_normalize(a);
  const int db = rp_degree(b);
  while (rp_degree(a) >= db && rp_degree(a) >= 0) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= factor * b[i];
    }
    a.pop_back();
    rp_normalize(a);
  }
  return a;
}

inline std::pair<RatPoly, RatPoly> rp_divide(RatPoly a, const RatPoly& b) {
  rp_normalize(a);
  const int db = rp_degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  RatPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (rp_degree(a) >= db && rp_degree(a) >= 0) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= factor * b[i];
    }
    a.pop_back();
    rp_normalize(a);
  }
  rp_normalize(q);
  return {q, a};
}

inline RatPoly rp_monic(RatPoly p) {
  rp_normalize(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_normalize(a);
  rp_normalize(b);
  while (!b.empty()) {
    RatPoly r = rp_remainder(a, b);
    a = std::move(b);
    b = rp_monic(std::move(r));
  }
  return rp_monic(std::move(a));
}

// Primitive integer polynomial with positive leading coefficient.
inline IntPolynomial rp_to_primitive_int(const RatPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) den = lcm(den, denominator(c));
  IntPolynomial out;
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = numerator(c) * (den / denominator(c));
    content = gcd(content, v);
    out.coeffs.push_back(std::move(v));
  }
  out.normalize();
  if (content != 0) {
    for (auto& v : out.coeffs) v /= content;
  }
  if (!out.coeffs.empty() && out.coeffs.back() < 0) {
    for (auto& v : out.coeffs) v = -v;
  }
  return out;
}

}  // namespace detail

// The square-free part p / gcd(p, p'); shares the roots of p, each simple.
inline IntPolynomial square_free_part(const IntPolynomial& p) {
  using namespace detail;
  RatPoly a = rp_from(p);
  if (rp_degree(a) <= 0) {
    IntPolynomial out = p;
    out.normalize();
    return out;
  }
  RatPoly g = rp_gcd(a, rp_derivative(a));
  if (rp_degree(g) <= 0) return rp_to_primitive_int(a);
  auto [q, r] = rp_divide(a, g);
  if (!r.empty()) throw std::logic_error("square-free division left a remainder");
  return rp_to_primitive_int(q);
}

// Certified isolation of the largest real root via a Sturm chain: the
// enclosure [lo, hi] always contains the largest real root, and exact (often
// integer) roots collapse to zero-width enclosures.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  Rational midpoint() const {
    Rational m = lo + hi;
    m /= 2;
    return m;
  }
};

inline std::optional<RootEnclosure> largest_real_root(const IntPolynomial& p,
                                                      const Rational& tol) {
  using namespace detail;
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (p.degree() < 0) throw std::invalid_argument("zero polynomial has every root");
  if (p.degree() == 0) return std::nullopt;

  const IntPolynomial sf = square_free_part(p);
  std::vector<RatPoly> chain;
  chain.push_back(rp_from(sf));
  chain.push_back(rp_derivative(chain[0]));
  rp_normalize(chain[1]);
  while (!chain.back().empty() && rp_degree(chain.back()) >= 1) {
    RatPoly r = rp_remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    rp_normalize(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  const auto variations = [&chain](const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const RatPoly& q : chain) {
      Rational v = rp_eval(q, x);
      int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  // Roots in (a, b], valid when neither endpoint is a root of sf.
  const auto roots_in = [&variations](const Rational& a, const Rational& b) {
    return variations(a) - variations(b);
  };

  // Cauchy bound: every root has |x| < 1 + max |c_i| / |lead|.
  Rational bound(1);
  const BigInt lead = abs(sf.coeffs[static_cast<std::size_t>(sf.degree())]);
  for (int i = 0; i < sf.degree(); ++i) {
    Rational c(abs(sf.coeffs[static_cast<std::size_t>(i)]), lead);
    if (c > bound) bound = c;
  }
  bound += 1;

  Rational lo = -bound;
  Rational hi = bound;
  if (roots_in(lo, hi) == 0) return std::nullopt;

  // Invariant: the largest real root lies in (lo, hi] and sf(hi) != 0.
  while (hi - lo > tol) {
    Rational mid = lo + hi;
    mid /= 2;
    if (sf.sign_at(mid) == 0) {
      if (roots_in(mid, hi) >= 1) {
        lo = mid;  // an even larger root exists to the right
      } else {
        return RootEnclosure{mid, mid, true};
      }
    } else if (roots_in(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RootEnclosure{lo, hi, false};
}

}  // namespace patdyn
