#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace solenoid {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a plain decimal literal ("0.25", "-1.5e-3") into an
/// exact rational. Throws Error{kParse} on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer floor_real(double value);

/// x mod n in [0, n) for n > 0.
Rational mod(const Rational& x, const Integer& n);
double mod(double x, double n);

/// Exact binary value of a finite double.
Rational from_double(double value);
double to_double(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Arc distance on R/nZ.
Rational circle_distance(const Rational& a, const Rational& b,
                         const Integer& n);
double circle_distance(double a, double b, double n);

}  // namespace solenoid
