#pragma once

#include <vector>

#include "loopshift/series.hpp"

namespace loopshift {

// Sequences below are indexed by n: entry [n] is the value at n, entry [0]
// is unused and zero. Sizes follow the degree of the originating series.

// Fixed-point counts of the loop shift of f: the coefficients of
// z f'(z) / (1 - f(z)), exact.
std::vector<BigInt> fix_counts(const Series& f);

// Moebius function mu(n), n >= 1.
int moebius(int n);

// Orbit counts by Moebius inversion: O_n = (1/n) sum_{k|n} mu(n/k) Fix_k.
// Throws NotRealizableError(n) when the inversion sum is negative or not
// divisible by n.
std::vector<BigInt> orbit_counts(const std::vector<BigInt>& fix);

struct OrbitData {
  std::vector<BigInt> fix;
  std::vector<BigInt> orbits;
  static OrbitData of(const Series& f);
};

// prod_{n<=N} (1 - z^n)^{O_n} - (1 - f) as a signed coefficient sequence,
// indexed by exponent 0..N. All-zero iff the orbit counts are consistent
// with f.
std::vector<BigInt> product_formula_residual(const Series& f,
                                             const std::vector<BigInt>& orbits);

// Signed truncated polynomial helpers (coefficients indexed by exponent).
std::vector<BigInt> product_one_minus_powers(const std::vector<BigInt>& exponents,
                                             int degree);
std::vector<BigInt> signed_convolution(const std::vector<BigInt>& a,
                                       const std::vector<BigInt>& b, int degree);
// 1 - f as a signed coefficient sequence of size degree+1.
std::vector<BigInt> one_minus(const Series& f);

// Estimate of limsup |O_n(F) - O_n(G)|^{1/n} over the trailing window
// (default: the last half of the common truncation). Returns 0 when every
// discrepancy in the window vanishes.
double discrepancy_growth(const Series& F, const Series& G,
                          double window_fraction = 0.5);

// log2 of a nonnegative big integer, -inf for 0. Shared with the transform
// diagnostics.
double log2_approx(const BigInt& v);

}  // namespace loopshift
