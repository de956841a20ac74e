#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace regmix {

/// Parameter triple of the recursive exponential-gamma mixture: shape
/// alpha > 0, rate theta > 0 (units 1/time) and recursion depth n >= 1.
/// The depth is configuration, not a fitted parameter; the conventional
/// default is 3.
class RegParams {
  public:
    static constexpr int kDefaultDepth = 3;

    RegParams(double alpha, double theta, int n = kDefaultDepth)
        : alpha_(alpha), theta_(theta), n_(n) {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw std::domain_error("RegParams: alpha must be positive and finite, got " +
                                    std::to_string(alpha));
        }
        if (!(theta > 0.0) || !std::isfinite(theta)) {
            throw std::domain_error("RegParams: theta must be positive and finite, got " +
                                    std::to_string(theta));
        }
        if (n < 1) {
            throw std::domain_error("RegParams: depth n must be a positive integer, got " +
                                    std::to_string(n));
        }
    }

    double alpha() const noexcept { return alpha_; }
    double theta() const noexcept { return theta_; }
    int depth() const noexcept { return n_; }

    /// Mixture weight of the exponential component,
    /// p_n = (theta / (theta + 1))^n, strictly inside (0, 1).
    double weight() const noexcept {
        const double ratio = theta_ / (theta_ + 1.0);
        double p = 1.0;
        double base = ratio;
        for (int e = n_; e > 0; e >>= 1) {
            if (e & 1) p *= base;
            base *= base;
        }
        return p;
    }

  private:
    double alpha_;
    double theta_;
    int n_;
};

/// Mean/variance and the dimensionless summary indices.
struct MomentSummary {
    double mean;
    double variance;
    double cv;
    double skewness;
    double kurtosis;
};

}  // namespace regmix
