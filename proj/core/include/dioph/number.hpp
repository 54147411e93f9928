#pragma once

// Arbitrary-precision integers and rationals.
//
// Both are GMP types. mpq_class keeps every value in canonical form
// (coprime numerator and denominator, denominator positive, zero as 0/1)
// after each arithmetic operation; values built from a numerator and a
// denominator must go through make_rational().
//
// Beware of gmpxx expression templates: never bind an arithmetic
// expression to `auto`, always name the result type.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (q != 0); whitespace around the parts is allowed.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
/// Exact square root if n is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
/// Exact integer cube root (n may be negative).
std::optional<Integer> exact_cbrt(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& v);
Rational abs(const Rational& v);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

/// Floor division with a positive or negative divisor.
Integer floor_div(const Integer& a, const Integer& b);

bool fits_int64(const Integer& v);

}  // namespace dioph
