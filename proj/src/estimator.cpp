#include "regmix/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "regmix/detail/mixture_terms.hpp"
#include "regmix/errors.hpp"
#include "regmix/optimize.hpp"
#include "regmix/specfun.hpp"

namespace regmix {

namespace {

struct SampleStats {
    double mean;
    double variance;  // unbiased
};

SampleStats sample_stats(const Dataset& data) {
    const auto& x = data.values();
    const double m = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / m;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return SampleStats{mean, ss / (m - 1.0)};
}

// Observed-information standard errors at the optimum, as diagnostics.
std::string standard_errors_message(const RegParams& params, const Dataset& data) try {
    const double h_a = std::min(1e-5 * std::max(1.0, params.alpha()), 0.5 * params.alpha());
    const double h_t = std::min(1e-5 * std::max(1.0, params.theta()), 0.5 * params.theta());
    const auto score_at = [&](double a, double t) {
        return score(RegParams(a, t, params.depth()), data);
    };
    const auto [ap_a, ap_t] = score_at(params.alpha() + h_a, params.theta());
    const auto [am_a, am_t] = score_at(params.alpha() - h_a, params.theta());
    const auto [tp_a, tp_t] = score_at(params.alpha(), params.theta() + h_t);
    const auto [tm_a, tm_t] = score_at(params.alpha(), params.theta() - h_t);
    const double haa = (ap_a - am_a) / (2.0 * h_a);
    const double hat = 0.5 * ((tp_a - tm_a) / (2.0 * h_t) + (ap_t - am_t) / (2.0 * h_a));
    const double htt = (tp_t - tm_t) / (2.0 * h_t);
    const double det = haa * htt - hat * hat;
    if (!(det > 0.0) || !(haa < 0.0)) {
        return "observed information not positive definite; no standard errors";
    }
    const double var_a = -htt / det;
    const double var_t = -haa / det;
    std::ostringstream msg;
    msg << "se(alpha)=" << std::sqrt(var_a) << " se(theta)=" << std::sqrt(var_t);
    return msg.str();
} catch (const std::exception&) {
    return "standard errors unavailable (information matrix evaluation failed)";
}

}  // namespace

double log_likelihood(const RegParams& params, const Dataset& data) {
    if (data.count() == 0) throw data_error("log_likelihood: empty dataset");
    const double alpha = params.alpha();
    const double theta = params.theta();
    const double p = params.weight();
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);

    double loglik = static_cast<double>(data.count()) * std::log(theta);
    for (double x : data.values()) {
        if (!(x > 0.0)) throw data_error("log_likelihood: non-positive observation");
        loglik -= theta * x;
        loglik += detail::log_mixture_factor(log_p, log_q,
                                             detail::log_gamma_term(alpha, theta, x));
    }
    if (!std::isfinite(loglik)) {
        throw numeric_error("log_likelihood: non-finite result at alpha=" +
                            std::to_string(alpha) + " theta=" + std::to_string(theta));
    }
    return loglik;
}

std::pair<double, double> score(const RegParams& params, const Dataset& data) {
    if (data.count() == 0) throw data_error("score: empty dataset");
    const double alpha = params.alpha();
    const double theta = params.theta();
    const double n = static_cast<double>(params.depth());
    const double p = params.weight();
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double psi_alpha = digamma(alpha);
    const double weight_rate = n / (theta * (theta + 1.0));  // (dp/dtheta)/p
    const double p_over_q = p / (1.0 - p);

    double d_alpha = 0.0;
    double d_theta = static_cast<double>(data.count()) / theta;
    for (double x : data.values()) {
        if (!(x > 0.0)) throw data_error("score: non-positive observation");
        const double g = detail::log_gamma_term(alpha, theta, x);
        const double w = detail::gamma_weight(log_p, log_q, g);
        d_alpha += w * (std::log(theta * x) - psi_alpha);
        d_theta += weight_rate * ((1.0 - w) - p_over_q * w) + (alpha - 1.0) / theta * w - x;
    }
    if (!std::isfinite(d_alpha) || !std::isfinite(d_theta)) {
        throw numeric_error("score: non-finite result");
    }
    return {d_alpha, d_theta};
}

FitResult fit_mle(const Dataset& data, int n, std::optional<std::pair<double, double>> init) {
    if (data.count() < 3) {
        throw data_error("fit_mle: need at least 3 observations, got " +
                         std::to_string(data.count()));
    }
    const SampleStats stats = sample_stats(data);
    if (!(stats.variance > 0.0)) {
        throw data_error("fit_mle: degenerate data (all observations identical)");
    }

    double alpha0 = stats.mean * stats.mean / stats.variance;
    double theta0 = stats.mean / stats.variance;
    if (init) {
        alpha0 = init->first;
        theta0 = init->second;
    }
    alpha0 = std::clamp(alpha0, 1e-6, 1e6);
    theta0 = std::clamp(theta0, 1e-9, 1e9);

    // Transient probes can leave the parameter domain (exp overflow in the
    // log coordinates); report them as infeasible rather than throwing.
    const auto value = [&](const std::vector<double>& u) {
        try {
            return log_likelihood(RegParams(std::exp(u[0]), std::exp(u[1]), n), data);
        } catch (const std::exception&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    const auto nan_pair = [] {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return std::vector<double>{nan, nan};
    };
    const auto grad_log = [&](const std::vector<double>& u) {
        try {
            const double a = std::exp(u[0]);
            const double t = std::exp(u[1]);
            const auto [da, dt] = score(RegParams(a, t, n), data);
            return std::vector<double>{a * da, t * dt};
        } catch (const std::exception&) {
            return nan_pair();
        }
    };
    const auto grad_orig = [&](const std::vector<double>& u) {
        try {
            const auto [da, dt] = score(RegParams(std::exp(u[0]), std::exp(u[1]), n), data);
            return std::vector<double>{da, dt};
        } catch (const std::exception&) {
            return nan_pair();
        }
    };

    const MaximizeResult opt =
        maximize(value, grad_log, grad_orig, {std::log(alpha0), std::log(theta0)});

    FitResult fit{RegParams(std::exp(opt.x[0]), std::exp(opt.x[1]), n),
                  -opt.value,
                  opt.gradient_norm,
                  opt.iterations,
                  opt.converged,
                  {}};
    if (!opt.message.empty()) fit.messages.push_back(opt.message);
    if (fit.converged) fit.messages.push_back(standard_errors_message(fit.params, data));
    return fit;
}

}  // namespace regmix
