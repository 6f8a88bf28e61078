#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace carrymix {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with positive denominator.
///
/// Backed by GMP's mpq_class; every value produced by arithmetic operators is
/// canonical. Use make_rational() when building from a raw numerator and
/// denominator so the canonical form is restored.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Exact power b^e for a non-negative exponent.
BigInt big_pow(unsigned long base, unsigned long exponent);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Decimal rendering with a fixed number of fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& value, int digits);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace carrymix
