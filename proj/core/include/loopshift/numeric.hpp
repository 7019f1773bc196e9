#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace loopshift {

using BigInt = mpz_class;
using Rational = mpq_class;

// Exact integer ceiling of beta^n for rational beta >= 0.
BigInt ceil_pow(const Rational& beta, unsigned n);

// Best rational approximation of x with denominator <= max_den, via
// continued fractions. Used to pin doubles (growth estimates) into exact
// arithmetic.
Rational rational_from_double(double x, long max_den = 64);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

inline double to_double(const Rational& v) { return v.get_d(); }

}  // namespace loopshift
