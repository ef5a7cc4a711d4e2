#pragma once

#include <cstdint>
#include <stdexcept>

namespace patdyn {

enum class Ordering { Less, Equal, Greater };

// m = 2^exp2 * odd with odd ... odd.
struct SharkovskiiKey {
  int exp2 = 0;
  std::uint64_t odd = 1;

  std::uint64_t period() const { return odd << exp2; }
};

inline SharkovskiiKey sharkovskii_decompose(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("period must be >= 1");
  SharkovskiiKey key;
  while (m % 2 == 0) {
    m /= 2;
    ++key.exp2;
  }
  key.odd = m;
  return key;
}

// The total order with 3 greatest and 1 least:
//   3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > 4*5 > ... > 16 > 8 > 4 > 2 > 1.
// Rows of 2^a * (odd >= 3) come first, a ascending and odd part ascending
// inside a row; the pure powers of two follow in descending order.
inline Ordering sharkovskii_compare(std::uint64_t p, std::uint64_t q) {
  if (p == q) return Ordering::Equal;
  const SharkovskiiKey a = sharkovskii_decompose(p);
  const SharkovskiiKey b = sharkovskii_decompose(q);
  const bool a_pow2 = a.odd == 1;
  const bool b_pow2 = b.odd == 1;
  if (a_pow2 != b_pow2) return a_pow2 ? Ordering::Less : Ordering::Greater;
  if (a_pow2) return a.exp2 > b.exp2 ? Ordering::Greater : Ordering::Less;
  if (a.exp2 != b.exp2) return a.exp2 < b.exp2 ? Ordering::Greater : Ordering::Less;
  return a.odd < b.odd ? Ordering::Greater : Ordering::Less;
}

// q strictly below p.
inline bool sharkovskii_below(std::uint64_t q, std::uint64_t p) {
  return sharkovskii_compare(p, q) == Ordering::Greater;
}

}  // namespace patdyn
