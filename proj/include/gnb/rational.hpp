#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gnb {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view s);

double to_double(const Rational& r);

}  // namespace gnb
