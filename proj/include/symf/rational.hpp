#pragma once

#include <gmpxx.h>

#include <string>

namespace symf {

using Integer = mpz_class;
/// Exact rational. GMP arithmetic keeps results reduced, but a value built from a
/// numerator and denominator must go through ratio() or canonicalize().
using Rational = mpq_class;

/// "4/3", "-2", "0": integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a" or "a/b" with optional leading sign; throws UsageError otherwise.
Rational parse_rational(const std::string& text);

/// n/d reduced to lowest terms.
Rational ratio(const Integer& n, const Integer& d);

bool is_integer(const Rational& q);

Integer factorial(unsigned n);

} // namespace symf
