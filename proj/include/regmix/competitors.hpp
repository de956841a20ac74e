#pragma once

#include <string>
#include <vector>

#include "regmix/dataset.hpp"

namespace regmix {

/// Generalized-Lindley baseline families, identified by structural form:
///   GL3   — 3-parameter gamma mixture (alpha, theta, gamma >= 0):
///           f(x) = theta^2 (theta x)^(alpha-1) (alpha + gamma x) e^(-theta x)
///                  / ((gamma + theta) Gamma(alpha+1))
///   EXPGL — 2-parameter exponentiated Lindley (alpha, lambda > 0):
///           f(x) = alpha lambda^2 (1+x) (1 - (1+lambda+lambda x) e^(-lambda x)
///                  / (1+lambda))^(alpha-1) e^(-lambda x) / (1+lambda)
///   NGL   — 2-parameter gamma mixture (alpha >= 1, theta > 0):
///           f(x) = theta^alpha x^(alpha-2) (x + alpha - 1) e^(-theta x)
///                  / ((theta+1) Gamma(alpha))
///   QL    — 2-parameter quasi form (alpha > -1, theta > 0):
///           f(x) = theta (alpha + theta x) e^(-theta x) / (alpha + 1)
enum class Family { GL3, EXPGL, NGL, QL };

struct CompetitorModel {
    Family family;
    std::vector<double> params;  // ordered as in param_names(family)

    CompetitorModel(Family f, std::vector<double> values);
};

int param_count(Family family);
const char* family_name(Family family);
std::vector<std::string> param_names(Family family);
const char* family_formula(Family family);

double comp_pdf(const CompetitorModel& model, double x);
double comp_cdf(const CompetitorModel& model, double x);
double comp_log_likelihood(const CompetitorModel& model, const Dataset& data);

struct CompFitResult {
    CompetitorModel model;
    double neg_log_lik = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<std::string> messages;
};

/// Maximum likelihood over the family's domain with the shared safeguarded
/// optimizer and numeric gradients. Non-convergence is reported in the
/// result, not thrown; degenerate (all-identical) data is an error.
CompFitResult comp_fit(Family family, const Dataset& data);

}  // namespace regmix
