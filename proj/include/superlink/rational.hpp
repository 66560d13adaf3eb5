// rational.hpp
// ------------
// Thin helpers around GMP's exact rational type.  All coefficient and exponent
// arithmetic in the library is exact; doubles never appear.
//
// Caution: mpq_class's two-argument (num, den) constructor does not reduce the
// fraction, and GMP comparisons assume reduced form.  Every Rational built
// that way must be canonicalize()d before use; prefer parse_rational or
// arithmetic on already-canonical values.

#pragma once

#include <gmpxx.h>

#include <string>

namespace superlink {

using Rational = mpq_class;

// "p" when the denominator is 1, otherwise "p/r" (canonicalized, sign on p).
std::string rational_to_string(const Rational& x);

// Parses "p" or "p/r" with an optional leading sign.  Throws Errc::syntax_error.
Rational parse_rational(const std::string& text);

// x^e for integer e (negative allowed; requires x != 0 in that case).
Rational rational_pow(const Rational& x, long e);

// num/den reduced to canonical form (den != 0).
Rational frac(long num, long den);

bool is_integer(const Rational& x);

// Requires is_integer(x) and that the value fits in a long.
long to_long(const Rational& x);

}  // namespace superlink
