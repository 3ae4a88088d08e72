#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orthocusp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Renders "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace orthocusp
