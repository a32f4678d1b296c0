#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace geode {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0.
Integer factorial(unsigned long n);

/// Binomial coefficient with the falling-factorial convention:
/// binomial(y, k) = y (y-1) ... (y-k+1) / k! for every integer y and k >= 0,
/// and 0 for k < 0. Negative y is allowed.
Integer binomial(long y, long k);
Integer binomial(const Integer& y, long k);

/// (p_1 + ... + p_r)! / (p_1! ... p_r!)
Integer multinomial(std::span<const unsigned> parts);

/// base^e for e >= 0
Integer power(const Integer& base, unsigned long e);

/// num / den, throwing NotIntegral when the division leaves a remainder.
Integer divide_exact(const Integer& num, const Integer& den, const char* what);

/// Converts a rational known to be integral, throwing NotIntegral otherwise.
Integer to_integer(const Rational& q, const char* what);

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }
std::string to_decimal(const Rational& q);

/// Parses a base-10 integer, optionally signed. Throws std::invalid_argument.
Integer parse_integer(const std::string& text);

} // namespace geode
