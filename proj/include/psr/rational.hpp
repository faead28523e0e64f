#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace psr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or an integer literal (optional sign). The result is
/// canonical: gcd-reduced with a positive denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Least common multiple of the denominators of `values` (1 for an empty span).
Integer denominator_lcm(std::span<const Rational> values);

/// Smallest integer n with n >= value.
Integer ceil(const Rational& value);

/// Returns (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0.
struct BezoutResult {
  Integer gcd;
  Integer u;
  Integer v;
};
BezoutResult bezout(const Integer& a, const Integer& b);

}  // namespace psr
