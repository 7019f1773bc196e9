#pragma once

#include <string>

#include "loopshift/series.hpp"

namespace loopshift {

// Which singularity of 1/(1-f) determined the growth rate: the smallest
// positive root of f(x) = 1, or the coefficient-growth radius estimate.
enum class EntropyMethod { Root, Radius };

struct LambdaEnclosure {
  Rational lo;  // certified (root) or nominal (radius) lower bound
  Rational hi;
  EntropyMethod method = EntropyMethod::Root;
  // Geometric growth-rate estimate of the tail coefficients (least-squares
  // fit over the last third); 0 when the window carries no growth evidence.
  double growth_estimate = 0.0;
  int growth_window_begin = 0;
  int growth_window_points = 0;

  Rational midpoint() const { return (lo + hi) / 2; }
};

struct EntropyOptions {
  Rational tol = Rational(1, 1000000000000L);  // enclosure width, 1e-12
  // Radius branch fires when the growth estimate exceeds the root estimate
  // by this relative margin.
  double separation_margin = 0.10;
  int max_bisection_steps = 20000;
};

// Growth rate lambda > 1 of the loop shift of f, as an enclosure. Root
// branch: exact rational bisection on the partial sums of f (monotone in x,
// so the bracket is certified on the truncation). Radius branch: geometric
// fit over the trailing third of the coefficients.
LambdaEnclosure entropy(const Series& f, const EntropyOptions& opts = {});

// gcd of the support of f. Throws ZeroSeries for the zero series.
int period(const Series& f);

enum class VereJones { Transient, RecurrentNotPositive, PositiveRecurrent, Inconclusive };
enum class SprVerdict { Yes, No, Inconclusive };

struct SpectralEvidence {
  Rational partial_sum_at_lo;  // partial sum of f at x = 1/lambda.hi
  Rational partial_sum_at_hi;  // partial sum of f at x = 1/lambda.lo
  double growth_estimate = 0.0;
  double growth_vs_lambda = 0.0;  // growth_estimate / lambda_lo
  int window_begin = 0;
  int window_points = 0;
  std::string note;
};

struct SpectralReport {
  LambdaEnclosure lambda;
  int period = 1;
  VereJones vere_jones = VereJones::Inconclusive;
  SprVerdict spr = SprVerdict::Inconclusive;
  SpectralEvidence evidence;
};

struct ClassifyOptions {
  // SPR verdict Yes requires growth <= (1 - spr_margin) * lambda; verdict
  // No requires growth >= (1 - spr_margin/2) * lambda; in between the
  // verdict is Inconclusive.
  double spr_margin = 0.05;
};

SpectralReport classify(const Series& f, const LambdaEnclosure& lambda,
                        const ClassifyOptions& opts = {});

// F with support on the p-grid pulled back to a series in z: a_n = F_{pn}.
// Throws PeriodMismatchError(n) if a nonzero coefficient sits off the grid.
Series strip_period(const Series& F, int p);

// Inverse of strip_period: result degree is p * a.degree().
Series inflate_period(const Series& a, int p);

const char* to_string(VereJones v);
const char* to_string(SprVerdict v);
const char* to_string(EntropyMethod m);

}  // namespace loopshift
