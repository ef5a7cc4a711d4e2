#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace patdyn {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. Kept canonical by the backend: positive
// denominator, reduced fraction. Nothing in the library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "-p/q" or a bare integer string.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: " + text);
  }
}

// Canonical form: "p/q", or just "p" when the denominator is 1.
inline std::string rational_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace patdyn
