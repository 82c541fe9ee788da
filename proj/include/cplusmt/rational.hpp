#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cplusmt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3", "1.5", ".25", "7/6" into an exact rational. Throws
// std::invalid_argument on anything else.
Rational parseRational(const std::string& text);

// "7", "-3", "7/6" (lowest terms).
std::string ratioString(const Rational& q);

// Fixed-point decimal with up to maxFracDigits fractional digits; exact
// values that need more digits fall back to ratioString.
std::string decimalString(const Rational& q, int maxFracDigits = 12);

double toDouble(const Rational& q);

}  // namespace cplusmt
