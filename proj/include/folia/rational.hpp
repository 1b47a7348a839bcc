#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace folia {

/// Exact rational number. GMP keeps it canonical (positive denominator,
/// reduced) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws Error(InvalidInput) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

Rational make_rational(long num, long den = 1);

/// s >= 0 with s*s == r, when r is the square of a rational.
std::optional<Rational> is_rational_square(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

int sign(const Rational& r);

}  // namespace folia
