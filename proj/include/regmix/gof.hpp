#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regmix/dataset.hpp"

namespace regmix {

/// One-sample Kolmogorov-Smirnov statistic from the fitted CDF evaluated
/// at the sorted sample points: D = max_i max(i/m - F_i, F_i - (i-1)/m).
double ks_statistic(const std::vector<double>& cdf_values);

/// Akaike information criterion, 2k - 2*logL.
double aic(int k, double log_lik);

struct GofRow {
    std::string model;
    std::vector<std::pair<std::string, double>> estimates;
    int k = 0;
    double neg_log_lik = 0.0;
    double aic = 0.0;
    double ks = 0.0;
    bool converged = false;
    std::string message;

    bool operator==(const GofRow&) const = default;
};

/// Fit comparison over one dataset: the mixture model plus the four
/// baseline families, ranked by AIC and by K-S.
struct GofReport {
    std::string dataset_label;
    int depth = 0;
    std::vector<GofRow> rows;
    std::string best_by_aic;
    std::string best_by_ks;

    bool operator==(const GofReport&) const = default;
};

/// Fits all five models and assembles the comparison. Individual fit
/// failures are recorded in their rows; the report is still produced.
GofReport build_report(const Dataset& data, int n = 3);

/// JSON document with stable key order; parse_report inverts it exactly.
std::string report_to_json(const GofReport& report);
GofReport parse_report(const std::string& json_text);

/// Aligned text table (model, estimates, -LogL, AIC, K-S).
std::string report_to_table(const GofReport& report);

}  // namespace regmix
