#include "loopshift/spectral.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace loopshift {

namespace {

struct GrowthFit {
  double rate = 0.0;  // e^slope, 0 when no evidence
  int window_begin = 0;
  int points = 0;
};

// Least-squares slope of log f_n over the last third of the truncation,
// using only nonzero coefficients.
GrowthFit fit_tail_growth(const Series& f) {
  int deg = f.degree();
  int begin = deg - (deg + 2) / 3 + 1;
  if (begin < 1) begin = 1;
  std::vector<std::pair<double, double>> pts;
  for (int n = begin; n <= deg; ++n) {
    if (f.coeff(n) == 0) continue;
    // log of an arbitrary-precision value via mantissa/exponent split
    signed long e = 0;
    double m = mpz_get_d_2exp(&e, f.coeff(n).get_mpz_t());
    pts.emplace_back(static_cast<double>(n),
                     std::log(m) + static_cast<double>(e) * std::log(2.0));
  }
  GrowthFit fit;
  fit.window_begin = begin;
  fit.points = static_cast<int>(pts.size());
  if (pts.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  if (denom <= 0) return fit;
  double slope = (n * sxy - sx * sy) / denom;
  fit.rate = std::exp(slope);
  return fit;
}

}  // namespace

LambdaEnclosure entropy(const Series& f, const EntropyOptions& opts) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroSeries, "entropy of the zero series");
  if (!(opts.tol > 0))
    throw Error(ErrorCode::InvalidArgument, "entropy tolerance must be positive");

  GrowthFit fit = fit_tail_growth(f);

  bool have_root = f.coefficient_sum() > 1;
  Rational x_lo = 0, x_hi = 1;
  if (have_root) {
    // Partial sums are monotone increasing in x, so bisection brackets the
    // smallest positive root of sum f_n x^n = 1.
    int steps = 0;
    while (true) {
      if (x_lo > 0) {
        Rational width = 1 / x_lo - 1 / x_hi;
        if (width <= opts.tol) break;
      }
      if (++steps > opts.max_bisection_steps)
        throw Error(ErrorCode::Generic, "entropy bisection failed to converge");
      Rational mid = (x_lo + x_hi) / 2;
      if (compare_partial_sum(f, mid, 1) >= 0)
        x_hi = mid;
      else
        x_lo = mid;
    }
  }

  double lam_root = have_root ? 1.0 / to_double(x_hi) : 0.0;

  bool radius_branch;
  if (have_root) {
    radius_branch = fit.rate > (1.0 + opts.separation_margin) * lam_root;
  } else {
    radius_branch = fit.rate > 1.0 + opts.separation_margin;
  }

  LambdaEnclosure enc;
  enc.growth_estimate = fit.rate;
  enc.growth_window_begin = fit.window_begin;
  enc.growth_window_points = fit.points;

  if (radius_branch) {
    if (fit.points < 3)
      throw Error(ErrorCode::InconclusiveEntropy,
                  "radius and root estimates cannot be separated: growth window "
                  "has too few nonzero coefficients");
    Rational lam = rational_from_double(fit.rate, 1L << 30);
    enc.method = EntropyMethod::Radius;
    enc.lo = lam - opts.tol / 2;
    enc.hi = lam + opts.tol / 2;
    if (!(enc.lo > 1))
      throw Error(ErrorCode::EntropyAtOrBelowZero,
                  "growth estimate does not exceed 1 at this truncation");
    return enc;
  }

  if (!have_root)
    throw Error(ErrorCode::EntropyAtOrBelowZero,
                "no x in (0,1) reaches partial sum 1 within the truncation");

  enc.method = EntropyMethod::Root;
  enc.lo = 1 / x_hi;
  enc.hi = 1 / x_lo;
  return enc;
}

int period(const Series& f) {
  int g = 0;
  for (int n = 1; n <= f.degree(); ++n)
    if (f.coeff(n) != 0) g = std::gcd(g, n);
  if (g == 0) throw Error(ErrorCode::ZeroSeries, "period of the zero series");
  return g;
}

SpectralReport classify(const Series& f, const LambdaEnclosure& lambda,
                        const ClassifyOptions& opts) {
  SpectralReport rep;
  rep.lambda = lambda;
  rep.period = period(f);

  Rational x_lo = 1 / lambda.hi;  // smaller evaluation point
  Rational x_hi = 1 / lambda.lo;
  rep.evidence.partial_sum_at_lo = eval_partial(f, x_lo);
  if (x_hi < 1)
    rep.evidence.partial_sum_at_hi = eval_partial(f, x_hi);
  else
    rep.evidence.partial_sum_at_hi = rep.evidence.partial_sum_at_lo;
  rep.evidence.growth_estimate = lambda.growth_estimate;
  rep.evidence.window_begin = lambda.growth_window_begin;
  rep.evidence.window_points = lambda.growth_window_points;

  double lam_lo = to_double(lambda.lo);
  rep.evidence.growth_vs_lambda = lambda.growth_estimate / lam_lo;

  if (lambda.method == EntropyMethod::Radius) {
    // The partial-sum root lies strictly beyond the estimated radius, so
    // the sum at the singularity stays below 1: transient, and the
    // coefficients grow at rate lambda itself, so not SPR.
    rep.spr = SprVerdict::No;
    rep.vere_jones = rep.evidence.partial_sum_at_lo < 1 ? VereJones::Transient
                                                        : VereJones::Inconclusive;
    rep.evidence.note = "radius branch: partial sum at 1/lambda stays below 1";
    return rep;
  }

  // Root branch: the partial sum reaches 1 at 1/lambda, so the shift is
  // recurrent at this truncation. The subclass needs a tail certificate.
  if (lambda.growth_estimate <= (1.0 - opts.spr_margin) * lam_lo) {
    rep.spr = SprVerdict::Yes;
  } else if (lambda.growth_estimate >= (1.0 - opts.spr_margin / 2) * lam_lo) {
    rep.spr = SprVerdict::No;
  } else {
    rep.spr = SprVerdict::Inconclusive;
  }

  if (rep.spr == SprVerdict::Yes) {
    // Geometric tail bound certifies sum n f_n / lambda^n < infinity.
    rep.vere_jones = VereJones::PositiveRecurrent;
    rep.evidence.note = "root branch with geometric tail certificate";
  } else {
    rep.vere_jones = VereJones::Inconclusive;
    rep.evidence.note =
        "root branch: recurrent at this truncation, subclass not certified";
  }
  return rep;
}

Series strip_period(const Series& F, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "period must be >= 1");
  if (p == 1) return F;
  for (int n = 1; n <= F.degree(); ++n)
    if (n % p != 0 && F.coeff(n) != 0) throw PeriodMismatchError(n);
  int deg = F.degree() / p;
  if (deg < 1)
    throw Error(ErrorCode::InvalidArgument, "degree too small to strip period");
  Series a(deg);
  for (int m = 1; m <= deg; ++m) a.set_coeff(m, F.coeff(p * m));
  return a;
}

Series inflate_period(const Series& a, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "period must be >= 1");
  if (p == 1) return a;
  Series F(a.degree() * p);
  for (int m = 1; m <= a.degree(); ++m) F.set_coeff(p * m, a.coeff(m));
  return F;
}

const char* to_string(VereJones v) {
  switch (v) {
    case VereJones::Transient: return "transient";
    case VereJones::RecurrentNotPositive: return "null-recurrent";
    case VereJones::PositiveRecurrent: return "positive-recurrent";
    case VereJones::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SprVerdict v) {
  switch (v) {
    case SprVerdict::Yes: return "yes";
    case SprVerdict::No: return "no";
    case SprVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(EntropyMethod m) {
  return m == EntropyMethod::Root ? "root" : "radius";
}

}  // namespace loopshift
