#include "regmix/gof.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "regmix/competitors.hpp"
#include "regmix/distribution.hpp"
#include "regmix/errors.hpp"
#include "regmix/estimator.hpp"

namespace regmix {

namespace {

constexpr Family kFamilies[] = {Family::GL3, Family::EXPGL, Family::NGL, Family::QL};

double ks_against(const Dataset& data, const std::function<double(double)>& cdf_fn) {
    std::vector<double> sorted = data.values();
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> f;
    f.reserve(sorted.size());
    for (double x : sorted) f.push_back(cdf_fn(x));
    return ks_statistic(f);
}

std::string join_messages(const std::vector<std::string>& messages) {
    std::string out;
    for (const auto& m : messages) {
        if (!out.empty()) out += "; ";
        out += m;
    }
    return out;
}

// Lowest value wins; ties go to the model with fewer parameters.
void pick_best(GofReport& report) {
    const GofRow* best_aic = nullptr;
    const GofRow* best_ks = nullptr;
    for (const auto& row : report.rows) {
        if (!row.converged) continue;
        if (!best_aic || row.aic < best_aic->aic ||
            (row.aic == best_aic->aic && row.k < best_aic->k)) {
            best_aic = &row;
        }
        if (!best_ks || row.ks < best_ks->ks || (row.ks == best_ks->ks && row.k < best_ks->k)) {
            best_ks = &row;
        }
    }
    report.best_by_aic = best_aic ? best_aic->model : "";
    report.best_by_ks = best_ks ? best_ks->model : "";
}

}  // namespace

double ks_statistic(const std::vector<double>& cdf_values) {
    if (cdf_values.empty()) throw data_error("ks_statistic: empty input");
    const double m = static_cast<double>(cdf_values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < cdf_values.size(); ++i) {
        const double f = cdf_values[i];
        if (!(f >= 0.0 && f <= 1.0)) {
            throw std::domain_error("ks_statistic: CDF value outside [0,1]: " +
                                    std::to_string(f));
        }
        const double upper = static_cast<double>(i + 1) / m - f;
        const double lower = f - static_cast<double>(i) / m;
        d = std::max({d, upper, lower});
    }
    return d;
}

double aic(int k, double log_lik) {
    if (k < 1) throw std::domain_error("aic: k must be >= 1, got " + std::to_string(k));
    return 2.0 * k - 2.0 * log_lik;
}

GofReport build_report(const Dataset& data, int n) {
    GofReport report;
    report.dataset_label = data.label();
    report.depth = n;

    {
        GofRow row;
        row.model = "regmix";
        row.k = 2;
        try {
            const FitResult fit = fit_mle(data, n);
            row.estimates = {{"alpha", fit.params.alpha()}, {"theta", fit.params.theta()}};
            row.neg_log_lik = fit.neg_log_lik;
            row.aic = aic(row.k, -fit.neg_log_lik);
            row.ks = ks_against(data, [&](double x) { return cdf(fit.params, x); });
            row.converged = fit.converged;
            row.message = join_messages(fit.messages);
        } catch (const std::exception& e) {
            row.converged = false;
            row.message = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    for (Family family : kFamilies) {
        GofRow row;
        row.model = family_name(family);
        row.k = param_count(family);
        try {
            const CompFitResult fit = comp_fit(family, data);
            const auto names = param_names(family);
            for (std::size_t i = 0; i < names.size(); ++i) {
                row.estimates.emplace_back(names[i], fit.model.params[i]);
            }
            row.neg_log_lik = fit.neg_log_lik;
            row.aic = aic(row.k, -fit.neg_log_lik);
            row.ks = ks_against(data, [&](double x) { return comp_cdf(fit.model, x); });
            row.converged = fit.converged;
            row.message = join_messages(fit.messages);
        } catch (const std::exception& e) {
            row.converged = false;
            row.message = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    pick_best(report);
    return report;
}

std::string report_to_json(const GofReport& report) {
    nlohmann::ordered_json j;
    j["dataset"] = report.dataset_label;
    j["n"] = report.depth;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["model"] = row.model;
        r["estimates"] = nlohmann::ordered_json::array();
        for (const auto& [name, value] : row.estimates) {
            r["estimates"].push_back({{"name", name}, {"value", value}});
        }
        r["k"] = row.k;
        r["neg_log_lik"] = row.neg_log_lik;
        r["aic"] = row.aic;
        r["ks"] = row.ks;
        r["converged"] = row.converged;
        r["message"] = row.message;
        j["rows"].push_back(std::move(r));
    }
    j["best_by_aic"] = report.best_by_aic;
    j["best_by_ks"] = report.best_by_ks;
    return j.dump(2) + "\n";
}

GofReport parse_report(const std::string& json_text) {
    const auto j = nlohmann::ordered_json::parse(json_text);
    GofReport report;
    report.dataset_label = j.at("dataset").get<std::string>();
    report.depth = j.at("n").get<int>();
    for (const auto& r : j.at("rows")) {
        GofRow row;
        row.model = r.at("model").get<std::string>();
        for (const auto& e : r.at("estimates")) {
            row.estimates.emplace_back(e.at("name").get<std::string>(),
                                       e.at("value").get<double>());
        }
        row.k = r.at("k").get<int>();
        row.neg_log_lik = r.at("neg_log_lik").get<double>();
        row.aic = r.at("aic").get<double>();
        row.ks = r.at("ks").get<double>();
        row.converged = r.at("converged").get<bool>();
        row.message = r.at("message").get<std::string>();
        report.rows.push_back(std::move(row));
    }
    report.best_by_aic = j.at("best_by_aic").get<std::string>();
    report.best_by_ks = j.at("best_by_ks").get<std::string>();
    return report;
}

std::string report_to_table(const GofReport& report) {
    std::ostringstream out;
    out << "dataset: " << report.dataset_label << "  (n = " << report.depth << ")\n";
    out << std::left << std::setw(8) << "model" << std::setw(44) << "estimates" << std::right
        << std::setw(12) << "-LogL" << std::setw(12) << "AIC" << std::setw(12) << "K-S"
        << "\n";
    for (const auto& row : report.rows) {
        std::ostringstream est;
        for (std::size_t i = 0; i < row.estimates.size(); ++i) {
            if (i) est << "  ";
            est << row.estimates[i].first << "=" << std::fixed << std::setprecision(6)
                << row.estimates[i].second;
        }
        out << std::left << std::setw(8) << row.model << std::setw(44) << est.str();
        if (row.converged || std::isfinite(row.neg_log_lik)) {
            out << std::right << std::fixed << std::setprecision(6) << std::setw(12)
                << row.neg_log_lik << std::setw(12) << row.aic << std::setw(12) << row.ks;
        }
        if (!row.converged) out << "  [not converged]";
        if (!row.message.empty()) out << "  [" << row.message << "]";
        out << "\n";
    }
    out << "best by AIC: " << report.best_by_aic << "\n";
    out << "best by K-S: " << report.best_by_ks << "\n";
    return out.str();
}

}  // namespace regmix
