#include "loopshift/zeta.hpp"

#include <cmath>

namespace loopshift {

std::vector<BigInt> fix_counts(const Series& f) {
  // Fix(1-f) = z f'  =>  Fix_n = n f_n + sum_{j<n} f_j Fix_{n-j}.
  int deg = f.degree();
  std::vector<BigInt> fix(deg + 1);
  for (int n = 1; n <= deg; ++n) {
    BigInt v = f.coeff(n) * n;
    for (int j = 1; j < n; ++j) {
      if (f.coeff(j) == 0) continue;
      v += f.coeff(j) * fix[n - j];
    }
    fix[n] = std::move(v);
  }
  return fix;
}

int moebius(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "moebius requires n >= 1");
  int result = 1;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<BigInt> orbit_counts(const std::vector<BigInt>& fix) {
  int deg = static_cast<int>(fix.size()) - 1;
  std::vector<BigInt> orbits(deg + 1);
  for (int n = 1; n <= deg; ++n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      int mu = moebius(n / k);
      if (mu == 1)
        s += fix[k];
      else if (mu == -1)
        s -= fix[k];
    }
    if (s < 0 || !mpz_divisible_ui_p(s.get_mpz_t(), n)) throw NotRealizableError(n);
    orbits[n] = s / n;
  }
  return orbits;
}

OrbitData OrbitData::of(const Series& f) {
  OrbitData d;
  d.fix = fix_counts(f);
  d.orbits = orbit_counts(d.fix);
  return d;
}

namespace {

// Multiply the signed truncated polynomial acc (indexed by exponent) by
// (1 - z^n)^e, e >= 0, keeping degrees <= deg.
void mul_binomial_power(std::vector<BigInt>& acc, int n, const BigInt& e, int deg) {
  if (e == 0) return;
  int jmax = deg / n;
  // Coefficients of (1 - z^n)^e at z^{jn}: (-1)^j C(e, j), computed
  // incrementally with exact division.
  std::vector<BigInt> binom(jmax + 1);
  binom[0] = 1;
  for (int j = 0; j < jmax; ++j) {
    BigInt num = binom[j] * (e - j);
    binom[j + 1] = num / (j + 1);
  }
  std::vector<BigInt> out(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    if (acc[i] == 0) continue;
    for (int j = 0; j <= jmax && i + j * n <= deg; ++j) {
      if (j % 2 == 0)
        out[i + j * n] += acc[i] * binom[j];
      else
        out[i + j * n] -= acc[i] * binom[j];
    }
  }
  acc = std::move(out);
}

}  // namespace

std::vector<BigInt> product_formula_residual(const Series& f,
                                             const std::vector<BigInt>& orbits) {
  int deg = f.degree();
  std::vector<BigInt> acc = product_one_minus_powers(orbits, deg);
  // residual = acc - (1 - f)
  acc[0] -= 1;
  for (int n = 1; n <= deg; ++n) acc[n] += f.coeff(n);
  return acc;
}

std::vector<BigInt> product_one_minus_powers(const std::vector<BigInt>& exponents,
                                             int degree) {
  std::vector<BigInt> acc(degree + 1);
  acc[0] = 1;
  int emax = std::min<int>(degree, static_cast<int>(exponents.size()) - 1);
  for (int n = 1; n <= emax; ++n) mul_binomial_power(acc, n, exponents[n], degree);
  return acc;
}

std::vector<BigInt> signed_convolution(const std::vector<BigInt>& a,
                                       const std::vector<BigInt>& b, int degree) {
  std::vector<BigInt> out(degree + 1);
  for (int i = 0; i <= degree && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= degree && j < static_cast<int>(b.size()); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<BigInt> one_minus(const Series& f) {
  std::vector<BigInt> out(f.degree() + 1);
  out[0] = 1;
  for (int n = 1; n <= f.degree(); ++n) out[n] = -f.coeff(n);
  return out;
}

double log2_approx(const BigInt& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  signed long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

double discrepancy_growth(const Series& F, const Series& G, double window_fraction) {
  int deg = std::min(F.degree(), G.degree());
  auto of = orbit_counts(fix_counts(F.truncated(deg)));
  auto og = orbit_counts(fix_counts(G.truncated(deg)));
  int begin = deg - static_cast<int>(deg * window_fraction) + 1;
  if (begin < 1) begin = 1;
  double best = 0.0;
  for (int n = begin; n <= deg; ++n) {
    BigInt d = of[n] - og[n];
    if (d == 0) continue;
    if (d < 0) d = -d;
    double rate = std::exp2(log2_approx(d) / n);
    best = std::max(best, rate);
  }
  return best;
}

}  // namespace loopshift
