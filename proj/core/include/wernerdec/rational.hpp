#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace wernerdec {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer binomial(int n, int k);
Integer int_pow(const Integer& base, int exp);

/// base^exp for integer exp; negative exponents require base != 0.
Rational rat_pow(const Rational& base, int exp);

double to_double(const Rational& x);

int sign(const Rational& x);

/// Parses "a/b", plain integers, and decimal strings ("0.45", "-1.5e-3").
Rational parse_rational(const std::string& text);

/// "num/den", or just "num" when the denominator is one.
std::string format_fraction(const Rational& x);

/// Exact decimal expansion; throws std::domain_error unless the reduced
/// denominator is of the form 2^a 5^b.
std::string format_exact_decimal(const Rational& x);

/// floor(x * 10^digits) / 10^digits -- truncation toward -infinity.
Rational truncate_digits(const Rational& x, int digits);

/// Truncated fixed-point string with exactly `digits` decimals ("0.3169").
std::string format_truncated(const Rational& x, int digits);

}  // namespace wernerdec
