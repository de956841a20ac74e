#pragma once

#include <functional>
#include <string>
#include <vector>

namespace regmix {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct MaximizeOptions {
    int max_iterations = 200;
    double gradient_tolerance = 1e-6;
};

struct MaximizeResult {
    std::vector<double> x;
    double value = 0.0;
    double gradient_norm = 0.0;  // norm of the report gradient at x
    int iterations = 0;
    bool converged = false;
    std::string message;
};

/// Central-difference gradient of `f` at `x`.
std::vector<double> numeric_gradient(const ObjectiveFn& f, const std::vector<double>& x);

/// Safeguarded ascent for smooth low-dimensional likelihoods. Newton steps
/// use a finite-difference Hessian of `gradient`; when that Hessian is not
/// negative definite a BFGS (secant) approximation takes over, and every
/// step is halved until the objective does not decrease. Convergence is
/// declared on the norm of `report_gradient` (pass the same function as
/// `gradient` when no separate reporting coordinates exist).
MaximizeResult maximize(const ObjectiveFn& value, const GradientFn& gradient,
                        const GradientFn& report_gradient, std::vector<double> x0,
                        const MaximizeOptions& options = {});

}  // namespace regmix
