#include "regmix/competitors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "regmix/errors.hpp"
#include "regmix/optimize.hpp"
#include "regmix/specfun.hpp"

namespace regmix {

namespace {

void validate(Family family, const std::vector<double>& v) {
    const auto bad = [&](const std::string& why) {
        throw std::domain_error(std::string(family_name(family)) + ": " + why);
    };
    if (static_cast<int>(v.size()) != param_count(family)) bad("wrong parameter count");
    for (double x : v) {
        if (!std::isfinite(x)) bad("non-finite parameter");
    }
    switch (family) {
        case Family::GL3:
            if (!(v[0] > 0.0) || !(v[1] > 0.0)) bad("alpha and theta must be positive");
            if (!(v[2] >= 0.0)) bad("gamma must be nonnegative");
            break;
        case Family::EXPGL:
            if (!(v[0] > 0.0) || !(v[1] > 0.0)) bad("alpha and lambda must be positive");
            break;
        case Family::NGL:
            if (!(v[0] >= 1.0)) bad("alpha must be >= 1");
            if (!(v[1] > 0.0)) bad("theta must be positive");
            break;
        case Family::QL:
            if (!(v[0] > -1.0)) bad("alpha must be > -1");
            if (!(v[1] > 0.0)) bad("theta must be positive");
            break;
    }
}

void require_x(double x, bool allow_zero) {
    if (!std::isfinite(x) || (allow_zero ? !(x >= 0.0) : !(x > 0.0))) {
        throw std::domain_error("competitor: x out of domain, got " + std::to_string(x));
    }
}

// Lindley CDF 1 - (1+lambda+lambda x) e^(-lambda x) / (1+lambda), written
// via expm1 to keep small-x values accurate.
double lindley_cdf(double lambda, double x) {
    const double lx = lambda * x;
    return (-(1.0 + lambda) * std::expm1(-lx) - lx * std::exp(-lx)) / (1.0 + lambda);
}

double log_pdf(const CompetitorModel& m, double x) {
    const auto& v = m.params;
    switch (m.family) {
        case Family::GL3: {
            const double alpha = v[0], theta = v[1], gamma = v[2];
            return 2.0 * std::log(theta) + (alpha - 1.0) * std::log(theta * x) +
                   std::log(alpha + gamma * x) - theta * x - std::log(gamma + theta) -
                   log_gamma(alpha + 1.0);
        }
        case Family::EXPGL: {
            const double alpha = v[0], lambda = v[1];
            const double f_l = lindley_cdf(lambda, x);
            if (!(f_l > 0.0)) return -std::numeric_limits<double>::infinity();
            return std::log(alpha) + 2.0 * std::log(lambda) + std::log1p(x) +
                   (alpha - 1.0) * std::log(f_l) - lambda * x - std::log1p(lambda);
        }
        case Family::NGL: {
            const double alpha = v[0], theta = v[1];
            return alpha * std::log(theta) + (alpha - 2.0) * std::log(x) +
                   std::log(x + alpha - 1.0) - theta * x - std::log1p(theta) -
                   log_gamma(alpha);
        }
        case Family::QL: {
            const double alpha = v[0], theta = v[1];
            const double mass = alpha + theta * x;
            if (!(mass > 0.0)) return -std::numeric_limits<double>::infinity();
            return std::log(theta) + std::log(mass) - theta * x - std::log1p(alpha);
        }
    }
    return -std::numeric_limits<double>::infinity();
}

}  // namespace

CompetitorModel::CompetitorModel(Family f, std::vector<double> values)
    : family(f), params(std::move(values)) {
    validate(family, params);
}

int param_count(Family family) { return family == Family::GL3 ? 3 : 2; }

const char* family_name(Family family) {
    switch (family) {
        case Family::GL3: return "gl3";
        case Family::EXPGL: return "expgl";
        case Family::NGL: return "ngl";
        case Family::QL: return "ql";
    }
    return "?";
}

std::vector<std::string> param_names(Family family) {
    switch (family) {
        case Family::GL3: return {"alpha", "theta", "gamma"};
        case Family::EXPGL: return {"alpha", "lambda"};
        case Family::NGL: return {"alpha", "theta"};
        case Family::QL: return {"alpha", "theta"};
    }
    return {};
}

const char* family_formula(Family family) {
    switch (family) {
        case Family::GL3:
            return "theta^2*(theta*x)^(alpha-1)*(alpha+gamma*x)*exp(-theta*x)"
                   "/((gamma+theta)*Gamma(alpha+1))";
        case Family::EXPGL:
            return "alpha*lambda^2*(1+x)*(1-(1+lambda+lambda*x)*exp(-lambda*x)/(1+lambda))"
                   "^(alpha-1)*exp(-lambda*x)/(1+lambda)";
        case Family::NGL:
            return "theta^alpha*x^(alpha-2)*(x+alpha-1)*exp(-theta*x)/((theta+1)*Gamma(alpha))";
        case Family::QL:
            return "theta*(alpha+theta*x)*exp(-theta*x)/(alpha+1)";
    }
    return "?";
}

double comp_pdf(const CompetitorModel& model, double x) {
    require_x(x, false);
    const double lp = log_pdf(model, x);
    return std::isfinite(lp) ? std::exp(lp) : 0.0;
}

double comp_cdf(const CompetitorModel& model, double x) {
    require_x(x, true);
    if (x == 0.0) return 0.0;
    const auto& v = model.params;
    switch (model.family) {
        case Family::GL3: {
            const double alpha = v[0], theta = v[1], gamma = v[2];
            const double w = theta / (theta + gamma);
            return w * reg_lower_gamma(alpha, theta * x) +
                   (1.0 - w) * reg_lower_gamma(alpha + 1.0, theta * x);
        }
        case Family::EXPGL: {
            return std::pow(lindley_cdf(v[1], x), v[0]);
        }
        case Family::NGL: {
            const double alpha = v[0], theta = v[1];
            const double w = theta / (theta + 1.0);
            // The alpha -> 1 limit concentrates the first component at 0.
            const double head = (alpha == 1.0) ? 1.0 : reg_lower_gamma(alpha - 1.0, theta * x);
            return w * head + (1.0 - w) * reg_lower_gamma(alpha, theta * x);
        }
        case Family::QL: {
            const double alpha = v[0], theta = v[1];
            return 1.0 - (alpha + 1.0 + theta * x) * std::exp(-theta * x) / (alpha + 1.0);
        }
    }
    return 0.0;
}

double comp_log_likelihood(const CompetitorModel& model, const Dataset& data) {
    double loglik = 0.0;
    for (double x : data.values()) {
        loglik += log_pdf(model, x);
        if (!std::isfinite(loglik)) return -std::numeric_limits<double>::infinity();
    }
    return loglik;
}

CompFitResult comp_fit(Family family, const Dataset& data) {
    if (data.count() < 3) {
        throw data_error("comp_fit: need at least 3 observations, got " +
                         std::to_string(data.count()));
    }
    const double m = static_cast<double>(data.count());
    double sum = 0.0;
    for (double x : data.values()) sum += x;
    const double mean = sum / m;
    double ss = 0.0;
    for (double x : data.values()) ss += (x - mean) * (x - mean);
    const double var = ss / (m - 1.0);
    if (!(var > 0.0)) throw data_error("comp_fit: degenerate data (all observations identical)");

    // Transformed coordinates keeping each family inside its domain, and
    // moment-flavoured starting points.
    std::vector<double> u0;
    std::function<std::vector<double>(const std::vector<double>&)> to_params;
    std::function<std::vector<double>(const std::vector<double>&)> scale;  // d(param)/d(coord)
    switch (family) {
        case Family::GL3: {
            const double a0 = std::clamp(mean * mean / var, 1e-3, 1e6);
            const double t0 = std::clamp(mean / var, 1e-9, 1e9);
            u0 = {std::log(a0), std::log(t0), std::log(t0)};
            to_params = [](const std::vector<double>& u) {
                return std::vector<double>{std::exp(u[0]), std::exp(u[1]), std::exp(u[2])};
            };
            scale = to_params;
            break;
        }
        case Family::EXPGL: {
            // Lindley moment start: theta^2 mean + theta (mean-1) - 2 = 0.
            const double l0 =
                (-(mean - 1.0) + std::sqrt((mean - 1.0) * (mean - 1.0) + 8.0 * mean)) /
                (2.0 * mean);
            u0 = {0.0, std::log(l0)};
            to_params = [](const std::vector<double>& u) {
                return std::vector<double>{std::exp(u[0]), std::exp(u[1])};
            };
            scale = to_params;
            break;
        }
        case Family::NGL: {
            const double a0 = std::max(1.05, mean * mean / var);
            const double t0 = std::clamp(mean / var, 1e-9, 1e9);
            u0 = {std::log(a0 - 1.0), std::log(t0)};
            to_params = [](const std::vector<double>& u) {
                return std::vector<double>{1.0 + std::exp(u[0]), std::exp(u[1])};
            };
            scale = [](const std::vector<double>& u) {
                return std::vector<double>{std::exp(u[0]), std::exp(u[1])};
            };
            break;
        }
        case Family::QL: {
            u0 = {std::log(2.0), std::log(1.5 / mean)};
            to_params = [](const std::vector<double>& u) {
                return std::vector<double>{std::exp(u[0]) - 1.0, std::exp(u[1])};
            };
            scale = [](const std::vector<double>& u) {
                return std::vector<double>{std::exp(u[0]), std::exp(u[1])};
            };
            break;
        }
    }

    const auto value = [&](const std::vector<double>& u) {
        try {
            return comp_log_likelihood(CompetitorModel(family, to_params(u)), data);
        } catch (const std::domain_error&) {
            // Transformed coordinates can round onto a closed boundary
            // (e.g. -1 + exp(s) == -1); treat as infeasible.
            return -std::numeric_limits<double>::infinity();
        }
    };
    const auto grad = [&](const std::vector<double>& u) { return numeric_gradient(value, u); };
    const auto report = [&](const std::vector<double>& u) {
        std::vector<double> g = numeric_gradient(value, u);
        const std::vector<double> d = scale(u);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] /= d[i];
        return g;
    };

    const MaximizeResult opt = maximize(value, grad, report, u0);
    std::vector<double> fitted = to_params(opt.x);

    // The QL likelihood diverges toward alpha = -1 whenever the data sit
    // above the sign change of (alpha + theta x): the normalizer 1/(alpha+1)
    // blows up while no observation sees the negative-density region. The
    // formula stops being a nonnegative density below alpha = 0, so when the
    // optimizer heads for that boundary the constrained optimum over
    // alpha >= 0 is reported instead; it lies at alpha = 0 exactly, where
    // the family reduces to gamma(2, theta) and theta has the closed form
    // 2/mean. Convergence is then judged by the projected (theta) gradient.
    if (family == Family::QL && fitted[0] < -0.9) {
        const double theta_hat = 2.0 / mean;
        const CompetitorModel boundary(family, {0.0, theta_hat});
        const double ll = comp_log_likelihood(boundary, data);
        // At alpha = 0 the gradient is available in closed form:
        // dl/dtheta = 2m/theta - sum(x), dl/dalpha = sum 1/(theta x_i) - m.
        const double d_theta = 2.0 * m / theta_hat - sum;
        double inv_sum = 0.0;
        for (double x : data.values()) inv_sum += 1.0 / (theta_hat * x);
        const double d_alpha = inv_sum - m;
        CompFitResult fit{boundary, -ll, std::fabs(d_theta), opt.iterations,
                          std::fabs(d_theta) <= 1e-6 && d_alpha <= 0.0,
                          {"likelihood unbounded toward alpha = -1 (signed density); "
                           "reporting the constrained optimum over alpha >= 0, attained at "
                           "the boundary alpha = 0 (projected gradient)"}};
        return fit;
    }

    CompFitResult fit{CompetitorModel(family, fitted),
                      -opt.value,
                      opt.gradient_norm,
                      opt.iterations,
                      opt.converged,
                      {}};
    if (!opt.message.empty()) fit.messages.push_back(opt.message);
    return fit;
}

}  // namespace regmix
