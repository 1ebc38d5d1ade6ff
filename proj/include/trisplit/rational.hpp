#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace trisplit {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision fraction. The backend keeps values in lowest terms
// with a positive denominator; every operation is exact, there is no
// floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

// Parses "p" or "p/q"; p may carry a sign, q must be a positive integer.
// Throws std::invalid_argument on anything else (including zero
// denominators).
Rational parse_rational(const std::string& text);

}  // namespace trisplit
