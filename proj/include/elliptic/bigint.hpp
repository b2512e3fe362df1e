#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace elliptic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& value);

// Natural logarithm of |value|; finite for any non-zero value, including
// values far outside the range of double.
double log_abs(const BigInt& value);

}  // namespace elliptic
