#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace patdyn {

// Raised when an images vector is not a single-cycle permutation. The CLI
// maps this to exit code 2.
class InvalidPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cyclic permutation tau of {1..n}, 1-indexed: images()[i-1] = tau(i).
// This is the shared combinatorial object behind periodic orbits of interval
// maps and periodic orbits of strips on the cylinder: it records how the
// spatially ordered orbit points (or strips) are permuted by the map.
class Pattern {
 public:
  // Accepts exactly the single-cycle permutations of {1..n}, n >= 1.
  static Pattern validate(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw InvalidPattern("NotAPermutation: empty image list");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
      if (v < 1 || v > n) {
        throw InvalidPattern("NotAPermutation: image " + std::to_string(v) +
                             " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v - 1)]) {
        throw InvalidPattern("NotAPermutation: repeated image " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    // A permutation is an n-cycle iff the orbit of 1 has length n.
    int len = 1;
    int at = images[0];
    while (at != 1) {
      at = images[static_cast<std::size_t>(at - 1)];
      ++len;
      if (len > n) break;
    }
    if (len != n) {
      throw InvalidPattern("NotCyclic: permutation is not a single " +
                           std::to_string(n) + "-cycle");
    }
    return Pattern(std::move(images));
  }

  // Comma-separated 1-indexed images, e.g. "2,3,1".
  static Pattern parse(const std::string& csv) {
    std::vector<int> images;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        images.push_back(v);
      } catch (const std::exception&) {
        throw InvalidPattern("NotAPermutation: bad image token '" + tok + "'");
      }
    }
    return validate(std::move(images));
  }

  int period() const { return static_cast<int>(images_.size()); }

  // tau(i), 1 <= i <= period().
  int image_of(int i) const {
    if (i < 1 || i > period()) throw std::out_of_range("pattern index out of range");
    return images_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<int>& images() const { return images_; }

  // Spatial reflection: nu(i) = n+1 - tau(n+1-i).
  Pattern mirror() const {
    const int n = period();
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      m[static_cast<std::size_t>(i - 1)] = n + 1 - image_of(n + 1 - i);
    }
    return Pattern(std::move(m));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i]);
    }
    return s;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    return a.images_ < b.images_;
  }

 private:
  explicit Pattern(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// The minimal-entropy cycle of odd period q >= 3: the inward spiral
//   c -> c+1 -> c-1 -> c+2 -> c-2 -> ... -> c+(q-1)/2 -> c-(q-1)/2 -> c
// with c = (q+1)/2, so tau(c) = c+1. The mirror image is the other minimal
// cycle of period q; this orientation is the library-wide convention.
inline Pattern stefan_pattern(int q) {
  if (q < 3 || q % 2 == 0) {
    throw std::invalid_argument("NotOddOrTooSmall: stefan pattern needs odd q >= 3, got " +
                                std::to_string(q));
  }
  const int c = (q + 1) / 2;
  std::vector<int> orbit;
  orbit.reserve(static_cast<std::size_t>(q));
  orbit.push_back(c);
  for (int k = 1; k <= (q - 1) / 2; ++k) {
    orbit.push_back(c + k);
    orbit.push_back(c - k);
  }
  std::vector<int> images(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) {
    images[static_cast<std::size_t>(orbit[static_cast<std::size_t>(j)] - 1)] =
        orbit[static_cast<std::size_t>((j + 1) % q)];
  }
  return Pattern::validate(std::move(images));
}

// Period doubling. For tau of period m the result has period 2m, sends
// i -> m+i for i <= m and m+j -> tau(j), so the two halves {1..m} and
// {m+1..2m} are swapped and the second iterate acts on each half like tau.
// The transition matrix of the doubled pattern has characteristic polynomial
// (x - 1) * p(x^2), with p the characteristic polynomial of tau's matrix, so
// the entropy of the doubled pattern is exactly half the entropy of tau.
inline Pattern double_pattern(const Pattern& tau) {
  const int m = tau.period();
  std::vector<int> images(static_cast<std::size_t>(2 * m));
  for (int i = 1; i <= m; ++i) {
    images[static_cast<std::size_t>(i - 1)] = m + i;
    images[static_cast<std::size_t>(m + i - 1)] = tau.image_of(i);
  }
  return Pattern::validate(std::move(images));
}

}  // namespace patdyn
