#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace waring {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// b^e for non-negative integer exponents.
BigInt pow_big(const BigInt& base, unsigned exp);
Rational pow_rational(const Rational& base, unsigned exp);

// Largest integer <= x, smallest integer >= x.
BigInt rational_floor(const Rational& x);
BigInt rational_ceil(const Rational& x);

// x - floor(x), always in [0, 1).
Rational frac01(const Rational& x);

double to_double(const Rational& x);

// e(x) = exp(2*pi*i*x) evaluated from the exact fractional part of x, so the
// angle never loses precision to a large integer part.
Complex unit_phase(const Rational& x);

// Accepts "p/q", a plain integer, or a decimal string ("0.25" -> 1/4, kept
// exact).  decimal_converted, when non-null, reports that the decimal form
// was used (callers may want to warn).  Throws UsageError on anything else
// or on a zero denominator.
Rational parse_rational(const std::string& text, bool* decimal_converted = nullptr);

// "p/q" in lowest terms (plain "p" when the denominator is 1).
std::string rational_to_string(const Rational& x);

} // namespace waring
