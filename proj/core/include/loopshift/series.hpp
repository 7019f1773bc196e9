#pragma once

#include <span>
#include <vector>

#include "loopshift/errors.hpp"
#include "loopshift/numeric.hpp"

namespace loopshift {

// Truncated formal power series with nonnegative integer coefficients and
// zero constant term. Coefficients are indexed by exponent: coeff(n) is the
// coefficient of z^n for 1 <= n <= degree(). All operations are exact up to
// the minimum degree of their operands; nothing is extrapolated past the
// truncation.
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(int degree);

  // coeffs[i] is the coefficient of z^(i+1).
  static Series from_coefficients(std::vector<BigInt> coeffs, int degree);
  static Series monomial(BigInt value, int exponent, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int n) const;
  void set_coeff(int n, BigInt value);

  bool is_zero() const;
  // Largest n with coeff(n) != 0, or 0 for the zero series.
  int support_max() const;
  // Smallest n with coeff(n) != 0, or 0 for the zero series.
  int support_min() const;
  BigInt coefficient_sum() const;

  Series truncated(int degree) const;

  bool operator==(const Series& other) const = default;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[0] == 0 always
};

Series add(const Series& a, const Series& b);

// a - b coefficientwise; throws NegativeCoefficientError if any a_n < b_n.
Series sub_checked(const Series& a, const Series& b);

// Cauchy product truncated to the minimum degree.
Series mul(const Series& a, const Series& b);

// The tail k + k^2 + k^3 + ... of the geometric star k* = 1/(1-k). The
// leading 1 of k* is implicit; use mul_one_plus to multiply by k*.
Series star_tail(const Series& k);

// a * (1 + t), the multiply-by-star companion of star_tail.
Series mul_one_plus(const Series& a, const Series& t);

// The series g with (1-g)(1-k) = (1-f) exactly to the common truncation,
// i.e. g = (f-k)k*. Throws NegativeCoefficientError when some coefficient
// of g would go negative (k is not a sub-series of f in the required
// sense).
Series divide_one_minus(const Series& f, const Series& k);

// Exact partial sum of f at a rational point 0 < x < 1.
Rational eval_partial(const Series& f, const Rational& x);

// Sign of (sum_{n<=N} f_n x^n) - threshold, with integer arithmetic only.
// Requires x > 0.
int compare_partial_sum(const Series& f, const Rational& x,
                        const Rational& threshold);

}  // namespace loopshift
