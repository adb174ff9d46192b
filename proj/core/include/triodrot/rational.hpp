#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace triodrot {

// All verdict-relevant arithmetic is exact. Denominators stay small (a few
// times q^2 for phase values, products of path lengths for loop extraction),
// but nothing here assumes that.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt floor_int(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Serialized form is always "num/den" with den >= 1, e.g. "0/1", "2/7".
std::string to_slash_string(const Rational& r);

// Accepts "p/q" or a bare integer "p".
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace triodrot
