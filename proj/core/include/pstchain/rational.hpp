// SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "pstchain/errors.hpp"

namespace pstchain {

// PST certification is a parity statement about integers, so every closed
// form is evaluated in exact rational arithmetic whenever the parameters are
// rational. Arbitrary precision is required: Pochhammer products and Gram
// sums overflow 64-bit integers well below N = 20.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline bool is_odd(const Integer& n) { return n % 2 != 0; }
inline bool is_even(const Integer& n) { return n % 2 == 0; }

/// True when q is an odd integer (denominator 1, odd numerator).
inline bool is_odd_integer(const Rational& q) {
  return denominator(q) == 1 && is_odd(numerator(q));
}

/// Parses "p", "-p" or "p/q" with integer p, q (q > 0 after normalization).
/// Decimal notation is rejected: it cannot represent the inputs exactly.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw FormatError("expected an exact rational like \"3\" or \"-7/2\", got \"" +
                      std::string(text) + "\"");
  };
  const auto parse_integer = [&](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);  // cpp_int rejects a leading '+'
    std::string_view digits = t;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) fail();
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    return Integer{std::string(t)};
  };

  const auto slash = text.find('/');
  const Integer p = parse_integer(text.substr(0, slash));
  if (slash == std::string_view::npos) return Rational(p);

  const Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) fail();
  return Rational(p, q);
}

/// Renders "p" or "p/q" (canonical form, positive denominator).
inline std::string format_rational(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

}  // namespace pstchain
