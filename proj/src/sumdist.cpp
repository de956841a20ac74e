#include "regmix/sumdist.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "regmix/specfun.hpp"

namespace regmix {

namespace {

constexpr int kMaxTerms = 10000;

double gamma_log_pdf(double shape, double rate, double x) {
    return shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x - log_gamma(shape);
}

}  // namespace

SumDistSpec sum_spec(const RegParams& params, int m) {
    if (m < 1) throw std::domain_error("sum_spec: m must be >= 1, got " + std::to_string(m));
    if (m > kMaxTerms) {
        throw std::domain_error("sum_spec: m capped at " + std::to_string(kMaxTerms) +
                                ", got " + std::to_string(m));
    }
    const double p = params.weight();
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double log_gamma_m1 = log_gamma(static_cast<double>(m) + 1.0);

    SumDistSpec spec;
    spec.m = m;
    spec.components.reserve(m + 1);
    for (int k = 0; k <= m; ++k) {
        const double log_choose = log_gamma_m1 - log_gamma(k + 1.0) -
                                  log_gamma(static_cast<double>(m - k) + 1.0);
        const double log_w = log_choose + (m - k) * log_p + k * log_q;
        spec.components.push_back(SumComponent{
            std::exp(log_w), m + k * (params.alpha() - 1.0), params.theta()});
    }
    return spec;
}

double total_weight(const SumDistSpec& spec) {
    double total = 0.0;
    for (const auto& c : spec.components) total += c.weight;
    return total;
}

double sum_pdf(const SumDistSpec& spec, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("sum_pdf: s must be positive and finite, got " +
                                std::to_string(s));
    }
    double density = 0.0;
    for (const auto& c : spec.components) {
        density += c.weight * std::exp(gamma_log_pdf(c.shape, c.rate, s));
    }
    return density;
}

double sum_cdf(const SumDistSpec& spec, double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw std::domain_error("sum_cdf: s must be nonnegative and finite, got " +
                                std::to_string(s));
    }
    if (s == 0.0) return 0.0;
    double total = 0.0;
    for (const auto& c : spec.components) {
        total += c.weight * reg_lower_gamma(c.shape, c.rate * s);
    }
    return total;
}

double sum_mgf(const SumDistSpec& spec, double t) {
    double total = 0.0;
    for (const auto& c : spec.components) {
        if (!(t < c.rate)) {
            throw std::domain_error("sum_mgf: t must be < rate, got " + std::to_string(t));
        }
        total += c.weight * std::pow(1.0 - t / c.rate, -c.shape);
    }
    return total;
}

}  // namespace regmix
