#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regmix/dataset.hpp"
#include "regmix/params.hpp"

namespace regmix {

/// Outcome of a maximum-likelihood fit of (alpha, theta) at fixed depth n.
struct FitResult {
    RegParams params;
    double neg_log_lik = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<std::string> messages;
};

/// Log-likelihood m*ln(theta) - theta*sum(x) + sum ln(p_n + (1-p_n) G_i),
/// with the mixture factor evaluated in log space.
double log_likelihood(const RegParams& params, const Dataset& data);

/// Analytic score (dl/dalpha, dl/dtheta). The theta component includes
/// the dp_n/dtheta = n p_n / (theta (theta+1)) chain-rule term.
std::pair<double, double> score(const RegParams& params, const Dataset& data);

/// Maximum-likelihood fit over (alpha, theta) in log-parameter space with
/// safeguarded Newton iteration. Default initialization is gamma
/// method-of-moments (alpha0 = mean^2/var, theta0 = mean/var); identical
/// observations are rejected as degenerate. Convergence: score norm <= 1e-6
/// within 200 iterations.
FitResult fit_mle(const Dataset& data, int n = RegParams::kDefaultDepth,
                  std::optional<std::pair<double, double>> init = std::nullopt);

}  // namespace regmix
