#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qwatson {

/// Exact rational number. GMP keeps every result in canonical form
/// (positive denominator, gcd(num, den) = 1).
using Rational = mpq_class;

/// Parses "p/r", "-p/r" or an integer literal. Decimals and whitespace are
/// rejected. Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/r", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// value^exponent; negative exponents invert. Throws DivisionByZero for a
/// zero base with a negative exponent.
Rational qpow(const Rational& base, long exponent);

/// Exact square root when both numerator and denominator are perfect
/// squares (non-negative root), otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& value);

/// True when numerator and denominator are coprime and the denominator is positive.
bool is_canonical(const Rational& value);

}  // namespace qwatson
