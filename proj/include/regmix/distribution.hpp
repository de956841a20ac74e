#pragma once

#include <complex>

#include "regmix/params.hpp"

namespace regmix {

/// Density theta*e^{-theta x} * (p_n + (1-p_n) (theta x)^{alpha-1} / Gamma(alpha)),
/// x > 0. The gamma factor is evaluated in log space; alpha = 1 reduces
/// exactly to the exponential density.
double pdf(const RegParams& params, double x);

/// Survival function p_n e^{-theta x} + (1-p_n) Q(alpha, theta x), x >= 0.
double reliability(const RegParams& params, double x);

/// 1 - reliability.
double cdf(const RegParams& params, double x);

/// Hazard rate pdf/reliability, x > 0. Exactly theta for alpha = 1.
/// Throws std::overflow_error once the density or survival probability
/// underflows to zero (theta*x around 700+); a silent zero or infinity
/// would poison downstream fits.
double hazard(const RegParams& params, double x);

/// Derivative of the hazard rate, computed from
/// h'(x) = h(x) * (h(x) - theta + (alpha-1) w(x) / x) where w is the
/// posterior weight of the gamma component at x.
double hazard_derivative(const RegParams& params, double x);

/// r-th raw moment, (r!/theta^r) * (p_n + (1-p_n) Gamma(alpha+r)/(r! Gamma(alpha))).
double raw_moment(const RegParams& params, int r);

/// k-th central moment via the binomial expansion over raw moments, k >= 2.
double central_moment(const RegParams& params, int k);

/// Mean, variance (from raw moments), coefficient of variation, skewness
/// and kurtosis.
MomentSummary moment_summary(const RegParams& params);

/// Moment generating function, defined for t < theta.
double mgf(const RegParams& params, double t);

/// Characteristic function, |cf(t)| <= 1 for all real t.
std::complex<double> cf(const RegParams& params, double t);

/// Inverse CDF by bracketing plus bisection with a final secant polish;
/// |cdf(result) - u| <= 1e-10 for u in (0, 1).
double quantile(const RegParams& params, double u);

/// Qualitative behaviour of the hazard rate over an interval.
enum class HazardShape { constant, decreasing, increasing, bathtub, upside_down, mixed };

/// Classifies the hazard on a geometric grid of `points` abscissae in
/// [x_lo, x_hi] by counting sign changes of the derivative.
HazardShape classify_hazard_shape(const RegParams& params, double x_lo, double x_hi,
                                  int points = 2000);

const char* to_string(HazardShape shape);

}  // namespace regmix
