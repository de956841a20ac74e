#pragma once

namespace regmix {

/// Natural log of the gamma function for a > 0.
///
/// Lanczos approximation (g = 7, 9 coefficients); relative accuracy is
/// better than 1e-13 on [1e-3, 1e3]. Returns exactly 0 at a = 1 and a = 2.
double log_gamma(double a);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
/// for a > 0, x >= 0. Series expansion for x < a + 1, Lentz continued
/// fraction otherwise; absolute accuracy ~1e-14 on a in [1e-3, 1e3],
/// x in [0, 1e3].
double reg_upper_gamma(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double reg_lower_gamma(double a, double x);

/// Digamma function psi(a) = d/da ln Gamma(a) for a > 0.
/// Recurrence lift to a >= 6, then the asymptotic expansion in 1/a^2.
double digamma(double a);

}  // namespace regmix
