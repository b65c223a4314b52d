#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace indcluster {

// Exact arithmetic is delegated to GMP; values are always canonical (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n" or "n/d"; throws ParseError otherwise and DivisionByZero for d == 0.
Rational parse_rational(std::string_view text);

// Always "num/den", including "n/1" for integers.
std::string rational_to_fraction(const Rational& q);

// "n" for integers, "n/d" otherwise.
std::string rational_to_string(const Rational& q);

}  // namespace indcluster
