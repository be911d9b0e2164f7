#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptcurves {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms, den > 0 (den is written even when it is 1).
std::string to_fraction_string(const Rational& r);

/// Parses "num/den" or a bare integer.
Rational parse_fraction(const std::string& text);

/// 17 significant digits, '.' separator, locale independent.
std::string to_decimal17(const Rational& r);
std::string to_decimal17(double v);

double to_double(const Rational& r);

Rational abs(const Rational& r);

/// r^k for k >= 0.
Rational pow(const Rational& r, unsigned k);
BigInt pow(const BigInt& b, unsigned k);

} // namespace ptcurves
