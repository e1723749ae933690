#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace permgrowth {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "13/5", "-3", "2.48187", "1e-9", "5e-5" into an exact rational.
/// Throws std::invalid_argument naming the offending token.
Rational parse_rational(std::string_view text);

/// Exact "num/den" form ("3" when the denominator is 1).
std::string to_fraction_string(const Rational& value);

/// Plain decimal rendering rounded to `significant_digits` significant
/// digits (half away from zero). Trailing zeros are kept.
std::string to_decimal_string(const Rational& value, int significant_digits);

Rational pow_rational(const Rational& base, unsigned exponent);

Int floor_rational(const Rational& value);

inline const Rational& default_tol() {
  static const Rational tol(1, 1000000000);  // 1e-9
  return tol;
}

}  // namespace permgrowth
