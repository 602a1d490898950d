#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace norlund {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored gcd-reduced with positive
// denominator. That invariant is what the exact layer relies on, and
// cpp_rational maintains it for us.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" for non-integers, plain "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational rational_from_string(const std::string& text);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

}  // namespace norlund
