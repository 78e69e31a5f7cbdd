#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace polyassoc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "7", "-3/4", "2.125" or "1.5e-3" into an exact rational.
/// Throws polyassoc::Error(ErrorCode::InvalidNumber) on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign(const Rational& value) { return value.sign(); }
inline int sign(const Integer& value) { return value.sign(); }

Integer pow3(unsigned exponent);

/// Largest k/2^bits with (k/2^bits)^2 <= value, for value >= 0.
Rational sqrt_lower(const Rational& value, unsigned bits);

/// The rational with the smallest denominator strictly inside (lo, hi).
/// Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace polyassoc
