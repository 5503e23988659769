#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmirror {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (optional leading sign).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

Integer factorial(unsigned long n);
Rational binomial(long n, long k);

}  // namespace qmirror
