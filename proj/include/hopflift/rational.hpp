#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hopflift {

// Exact rational arithmetic for sphere moments and symbolic fiber calculus.
// Moments are kept as rationals end to end and converted to double only at
// comparison time.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

double to_double(const Rational& r);

/// "2/3", "-1/2", or "5" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace hopflift
