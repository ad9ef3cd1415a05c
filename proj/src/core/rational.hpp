#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfm {

// GMP keeps mpq values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws Error(parse) on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

Integer factorial(unsigned n);

}  // namespace pfm
