#pragma once

#include <gmpxx.h>

#include <string>

namespace kpo {

// Arbitrary-precision rational, kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with q > 0, "p" when q == 1, "0" for zero.
std::string to_string(const Rational& q);

// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// num/den in lowest terms; throws std::domain_error for den == 0.
Rational ratio(const Integer& num, const Integer& den);

// n!! with the convention (-1)!! = 1; throws for n < -1.
Integer double_factorial(int n);
Integer factorial(int n);

Rational rational_pow(const Rational& base, int exponent);

}  // namespace kpo
