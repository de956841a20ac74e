#pragma once

#include <cmath>

#include "regmix/specfun.hpp"

// Shared log-space pieces of the mixture factor p + (1-p)(theta x)^(alpha-1)/Gamma(alpha).

namespace regmix::detail {

// g = ln[(theta x)^(alpha-1) / Gamma(alpha)]; zero when alpha == 1.
inline double log_gamma_term(double alpha, double theta, double x) {
    if (alpha == 1.0) return 0.0;
    return (alpha - 1.0) * std::log(theta * x) - log_gamma(alpha);
}

// ln(p + (1-p) e^g) given ln p and ln(1-p), safe against e^g overflow.
inline double log_mixture_factor(double log_p, double log_q, double g) {
    const double a = log_p;
    const double b = log_q + g;
    const double hi = (a > b) ? a : b;
    const double lo = (a > b) ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// Posterior weight of the gamma component, (1-p)e^g / (p + (1-p)e^g), in [0, 1).
inline double gamma_weight(double log_p, double log_q, double g) {
    const double s = log_p - log_q - g;
    if (s > 700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(s));
}

}  // namespace regmix::detail
