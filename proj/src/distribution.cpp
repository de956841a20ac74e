#include "regmix/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "regmix/detail/mixture_terms.hpp"
#include "regmix/errors.hpp"
#include "regmix/specfun.hpp"

namespace regmix {

namespace {

void require_x_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(fn) + ": x must be positive and finite, got " +
                                std::to_string(x));
    }
}

void require_x_nonneg(double x, const char* fn) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(fn) + ": x must be nonnegative and finite, got " +
                                std::to_string(x));
    }
}

double gamma_posterior_weight(const RegParams& params, double x) {
    const double p = params.weight();
    const double g = detail::log_gamma_term(params.alpha(), params.theta(), x);
    return detail::gamma_weight(std::log(p), std::log1p(-p), g);
}

double log_factorial(int r) { return log_gamma(static_cast<double>(r) + 1.0); }

}  // namespace

double pdf(const RegParams& params, double x) {
    require_x_positive(x, "pdf");
    const double theta = params.theta();
    const double p = params.weight();
    if (params.alpha() == 1.0) return theta * std::exp(-theta * x);
    const double g = std::exp(detail::log_gamma_term(params.alpha(), theta, x));
    return theta * std::exp(-theta * x) * (p + (1.0 - p) * g);
}

double reliability(const RegParams& params, double x) {
    require_x_nonneg(x, "reliability");
    const double theta = params.theta();
    if (params.alpha() == 1.0) return std::exp(-theta * x);
    const double p = params.weight();
    return p * std::exp(-theta * x) + (1.0 - p) * reg_upper_gamma(params.alpha(), theta * x);
}

double cdf(const RegParams& params, double x) { return 1.0 - reliability(params, x); }

double hazard(const RegParams& params, double x) {
    require_x_positive(x, "hazard");
    if (params.alpha() == 1.0) return params.theta();
    const double r = reliability(params, x);
    const double f = pdf(params, x);
    // Both factors decay like e^{-theta x}; once either underflows the
    // ratio is no longer meaningful.
    if (r == 0.0 || f == 0.0) {
        throw std::overflow_error("hazard: underflow at x = " + std::to_string(x) +
                                  " (theta*x = " + std::to_string(params.theta() * x) + ")");
    }
    return f / r;
}

double hazard_derivative(const RegParams& params, double x) {
    require_x_positive(x, "hazard_derivative");
    const double theta = params.theta();
    if (params.alpha() == 1.0) return 0.0;
    const double h = hazard(params, x);
    const double w = gamma_posterior_weight(params, x);
    return h * (h - theta + (params.alpha() - 1.0) * w / x);
}

double raw_moment(const RegParams& params, int r) {
    if (r < 1) throw std::domain_error("raw_moment: order r must be >= 1, got " + std::to_string(r));
    const double alpha = params.alpha();
    const double theta = params.theta();
    const double p = params.weight();
    // Gamma(alpha+r) / (r! Gamma(alpha)); exactly 1 when alpha == 1.
    const double lratio = log_gamma(alpha + r) - log_gamma(alpha) - log_factorial(r);
    const double ratio = std::exp(lratio);
    const double mix = (ratio == 1.0) ? 1.0 : p + (1.0 - p) * ratio;
    // r! / theta^r, in log space once the factorial leaves exact-double range.
    if (r <= 20) {
        double fact = 1.0;
        for (int i = 2; i <= r; ++i) fact *= i;
        return fact / std::pow(theta, r) * mix;
    }
    return std::exp(log_factorial(r) - r * std::log(theta)) * mix;
}

double central_moment(const RegParams& params, int k) {
    if (k < 2) {
        throw std::domain_error("central_moment: order k must be >= 2, got " + std::to_string(k));
    }
    const double mu = raw_moment(params, 1);
    double total = 0.0;
    double binom = 1.0;
    for (int r = 0; r <= k; ++r) {
        const double raw = (r == 0) ? 1.0 : raw_moment(params, r);
        total += binom * raw * std::pow(-mu, k - r);
        binom *= static_cast<double>(k - r) / static_cast<double>(r + 1);
    }
    return total;
}

MomentSummary moment_summary(const RegParams& params) {
    const double m1 = raw_moment(params, 1);
    const double m2 = raw_moment(params, 2);
    const double variance = m2 - m1 * m1;
    const double mu2 = central_moment(params, 2);
    const double mu3 = central_moment(params, 3);
    const double mu4 = central_moment(params, 4);
    return MomentSummary{m1, variance, std::sqrt(variance) / m1, mu3 / std::pow(mu2, 1.5),
                         mu4 / (mu2 * mu2)};
}

double mgf(const RegParams& params, double t) {
    const double theta = params.theta();
    if (!(t < theta) || !std::isfinite(t)) {
        throw std::domain_error("mgf: t must be finite and < theta, got t = " + std::to_string(t));
    }
    const double p = params.weight();
    const double base = 1.0 - t / theta;
    return (p + (1.0 - p) * std::pow(base, -(params.alpha() - 1.0))) / base;
}

std::complex<double> cf(const RegParams& params, double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("cf: t must be finite, got " + std::to_string(t));
    }
    const double p = params.weight();
    const std::complex<double> base(1.0, -t / params.theta());
    const std::complex<double> tail =
        (params.alpha() == 1.0) ? std::complex<double>(1.0, 0.0)
                                : std::pow(base, -(params.alpha() - 1.0));
    return (p + (1.0 - p) * tail) / base;
}

double quantile(const RegParams& params, double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("quantile: u must lie in (0, 1), got " + std::to_string(u));
    }
    const double mean = raw_moment(params, 1);
    const double sd = std::sqrt(std::max(0.0, raw_moment(params, 2) - mean * mean));
    double lo = 0.0;
    double hi = mean + 20.0 * sd;
    for (int i = 0; i < 200 && cdf(params, hi) < u; ++i) hi *= 2.0;
    if (cdf(params, hi) < u) throw numeric_error("quantile: failed to bracket u");

    for (int i = 0; i < 400 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(params, mid) < u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // One secant polish on the bracket.
    double x = 0.5 * (lo + hi);
    const double flo = cdf(params, lo) - u;
    const double fhi = cdf(params, hi) - u;
    if (fhi != flo) {
        const double secant = lo - flo * (hi - lo) / (fhi - flo);
        if (secant > 0.0 && std::isfinite(secant)) x = secant;
    }
    if (std::fabs(cdf(params, x) - u) > 1e-10) {
        throw numeric_error("quantile: refinement did not reach tolerance at u = " +
                            std::to_string(u));
    }
    return x;
}

HazardShape classify_hazard_shape(const RegParams& params, double x_lo, double x_hi, int points) {
    if (!(x_lo > 0.0) || !(x_hi > x_lo) || points < 2) {
        throw std::domain_error("classify_hazard_shape: need 0 < x_lo < x_hi and points >= 2");
    }
    std::vector<double> deriv(points);
    double max_abs = 0.0;
    const double ratio = std::pow(x_hi / x_lo, 1.0 / (points - 1));
    double x = x_lo;
    for (int i = 0; i < points; ++i, x *= ratio) {
        deriv[i] = hazard_derivative(params, std::min(x, x_hi));
        max_abs = std::max(max_abs, std::fabs(deriv[i]));
    }
    if (max_abs == 0.0) return HazardShape::constant;

    const double tol = 1e-10 * max_abs;
    int prev = 0;
    int down_up = 0;
    int up_down = 0;
    bool saw_pos = false;
    bool saw_neg = false;
    for (double d : deriv) {
        const int s = (d > tol) ? 1 : (d < -tol ? -1 : 0);
        if (s == 0) continue;
        saw_pos |= (s > 0);
        saw_neg |= (s < 0);
        if (prev < 0 && s > 0) ++down_up;
        if (prev > 0 && s < 0) ++up_down;
        prev = s;
    }
    if (!saw_pos && !saw_neg) return HazardShape::constant;
    if (down_up == 0 && up_down == 0) return saw_pos ? HazardShape::increasing : HazardShape::decreasing;
    if (down_up == 1 && up_down == 0) return HazardShape::bathtub;
    if (down_up == 0 && up_down == 1) return HazardShape::upside_down;
    return HazardShape::mixed;
}

const char* to_string(HazardShape shape) {
    switch (shape) {
        case HazardShape::constant: return "constant";
        case HazardShape::decreasing: return "decreasing";
        case HazardShape::increasing: return "increasing";
        case HazardShape::bathtub: return "bathtub";
        case HazardShape::upside_down: return "upside-down";
        case HazardShape::mixed: return "mixed";
    }
    return "unknown";
}

}  // namespace regmix
