#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbnc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "7", "-3/4". Denominator is omitted when it is 1.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Accepts a signed decimal integer or "num/den". Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

Integer factorial(int k);

}  // namespace rbnc
