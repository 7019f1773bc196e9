#include "loopshift/series.hpp"

#include <algorithm>

namespace loopshift {

BigInt ceil_pow(const Rational& beta, unsigned n) {
  Rational p;
  mpq_pow_ui(p.get_mpq_t(), beta.get_mpq_t(), n);
  BigInt q, r;
  mpz_cdiv_q(q.get_mpz_t(), p.get_num().get_mpz_t(), p.get_den().get_mpz_t());
  return q;
}

Rational rational_from_double(double x, long max_den) {
  if (x < 0) return -rational_from_double(-x, max_den);
  // Continued-fraction convergents p/q with q <= max_den.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 1e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return Rational(static_cast<long>(x));
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Series::Series(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  coeffs_.resize(static_cast<size_t>(degree) + 1);
}

Series Series::from_coefficients(std::vector<BigInt> coeffs, int degree) {
  Series s(degree);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (coeffs[i] < 0) throw NegativeCoefficientError(n);
    if (n <= degree) s.coeffs_[n] = std::move(coeffs[i]);
  }
  return s;
}

Series Series::monomial(BigInt value, int exponent, int degree) {
  Series s(degree);
  if (exponent >= 1 && exponent <= degree) s.set_coeff(exponent, std::move(value));
  return s;
}

const BigInt& Series::coeff(int n) const {
  static const BigInt kZero(0);
  if (n < 0 || n > degree()) return kZero;
  return coeffs_[n];
}

void Series::set_coeff(int n, BigInt value) {
  if (n < 1 || n > degree())
    throw Error(ErrorCode::InvalidArgument,
                "coefficient index out of range: " + std::to_string(n));
  if (value < 0) throw NegativeCoefficientError(n);
  coeffs_[n] = std::move(value);
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c == 0; });
}

int Series::support_max() const {
  for (int n = degree(); n >= 1; --n)
    if (coeffs_[n] != 0) return n;
  return 0;
}

int Series::support_min() const {
  for (int n = 1; n <= degree(); ++n)
    if (coeffs_[n] != 0) return n;
  return 0;
}

BigInt Series::coefficient_sum() const {
  BigInt s = 0;
  for (int n = 1; n <= degree(); ++n) s += coeffs_[n];
  return s;
}

Series Series::truncated(int degree) const {
  Series s(degree);
  for (int n = 1; n <= std::min(degree, this->degree()); ++n)
    s.coeffs_[n] = coeffs_[n];
  return s;
}

Series add(const Series& a, const Series& b) {
  int deg = std::min(a.degree(), b.degree());
  Series r(deg);
  for (int n = 1; n <= deg; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
  return r;
}

Series sub_checked(const Series& a, const Series& b) {
  int deg = std::min(a.degree(), b.degree());
  Series r(deg);
  for (int n = 1; n <= deg; ++n) {
    if (a.coeff(n) < b.coeff(n)) throw NegativeCoefficientError(n);
    r.set_coeff(n, a.coeff(n) - b.coeff(n));
  }
  return r;
}

Series mul(const Series& a, const Series& b) {
  int deg = std::min(a.degree(), b.degree());
  std::vector<BigInt> acc(static_cast<size_t>(deg) + 1);
  for (int i = 1; i <= deg; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 1; i + j <= deg; ++j) {
      if (b.coeff(j) == 0) continue;
      acc[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  Series r(deg);
  for (int n = 1; n <= deg; ++n) r.set_coeff(n, std::move(acc[n]));
  return r;
}

Series star_tail(const Series& k) {
  // t = k + k*t, solved coefficient by coefficient.
  int deg = k.degree();
  Series t(deg);
  for (int n = 1; n <= deg; ++n) {
    BigInt v = k.coeff(n);
    for (int j = 1; j < n; ++j) {
      if (k.coeff(j) == 0) continue;
      v += k.coeff(j) * t.coeff(n - j);
    }
    t.set_coeff(n, std::move(v));
  }
  return t;
}

Series mul_one_plus(const Series& a, const Series& t) {
  return add(a, mul(a, t));
}

Series divide_one_minus(const Series& f, const Series& k) {
  // (1-g)(1-k) = (1-f)  <=>  g_n = f_n - k_n + sum_{j<n} g_j k_{n-j}.
  int deg = std::min(f.degree(), k.degree());
  Series g(deg);
  for (int n = 1; n <= deg; ++n) {
    BigInt v = f.coeff(n) - k.coeff(n);
    for (int j = 1; j < n; ++j) {
      if (g.coeff(j) == 0 || k.coeff(n - j) == 0) continue;
      v += g.coeff(j) * k.coeff(n - j);
    }
    if (v < 0) throw NegativeCoefficientError(n);
    g.set_coeff(n, std::move(v));
  }
  return g;
}

Rational eval_partial(const Series& f, const Rational& x) {
  if (!(x > 0) || !(x < 1))
    throw Error(ErrorCode::InvalidArgument, "eval_partial requires 0 < x < 1");
  // Horner from the top coefficient down.
  Rational s = 0;
  for (int n = f.degree(); n >= 1; --n) {
    s += f.coeff(n);
    s *= x;
  }
  return s;
}

int compare_partial_sum(const Series& f, const Rational& x,
                        const Rational& threshold) {
  if (!(x > 0))
    throw Error(ErrorCode::InvalidArgument, "compare_partial_sum requires x > 0");
  // sum f_n (a/b)^n vs t:  sum f_n a^n b^(N-n) * den(t) vs num(t) * b^N.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  int deg = f.degree();
  std::vector<BigInt> apow(deg + 1), bpow(deg + 1);
  apow[0] = 1;
  bpow[0] = 1;
  for (int i = 1; i <= deg; ++i) {
    apow[i] = apow[i - 1] * a;
    bpow[i] = bpow[i - 1] * b;
  }
  BigInt lhs = 0;
  for (int n = 1; n <= deg; ++n) {
    if (f.coeff(n) == 0) continue;
    lhs += f.coeff(n) * apow[n] * bpow[deg - n];
  }
  lhs *= threshold.get_den();
  BigInt rhs = threshold.get_num() * bpow[deg];
  return cmp(lhs, rhs);
}

}  // namespace loopshift
