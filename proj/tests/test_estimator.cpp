#include <cmath>
#include <utility>
#include <vector>

#include <doctest.h>

#include "regmix/dataset.hpp"
#include "regmix/distribution.hpp"
#include "regmix/errors.hpp"
#include "regmix/estimator.hpp"
#include "regmix/rng.hpp"
#include "regmix/sampler.hpp"

using namespace regmix;

namespace {

std::pair<double, double> fd_score(const RegParams& params, const Dataset& data) {
    const double ha = 1e-6 * std::max(1.0, params.alpha());
    const double ht = 1e-6 * std::max(1.0, params.theta());
    const double da =
        (log_likelihood(RegParams(params.alpha() + ha, params.theta(), params.depth()), data) -
         log_likelihood(RegParams(params.alpha() - ha, params.theta(), params.depth()), data)) /
        (2.0 * ha);
    const double dt =
        (log_likelihood(RegParams(params.alpha(), params.theta() + ht, params.depth()), data) -
         log_likelihood(RegParams(params.alpha(), params.theta() - ht, params.depth()), data)) /
        (2.0 * ht);
    return {da, dt};
}

}  // namespace

TEST_CASE("log-likelihood closed cases") {
    const Dataset one("one", {1.0});
    CHECK(log_likelihood(RegParams(1.0, 1.0, 3), one) == doctest::Approx(-1.0).epsilon(1e-12));

    const Dataset ex1 = load_builtin("ex1");
    const double xbar = ex1.mean();
    CHECK(log_likelihood(RegParams(1.0, 1.0 / xbar, 3), ex1) ==
          doctest::Approx(-100.0 * (1.0 + std::log(xbar))).epsilon(1e-12));

    const Dataset twos("twos", {2.0, 2.0});
    CHECK(log_likelihood(RegParams(2.0, 1.0, 1), twos) ==
          doctest::Approx(2.0 * std::log(3.0 * std::exp(-2.0) / 2.0)).epsilon(1e-13));
}

TEST_CASE("log-likelihood stays finite in overflow-prone corners") {
    const Dataset wide("wide", {1e-6, 500.0, 900.0});
    CHECK(std::isfinite(log_likelihood(RegParams(80.0, 3.0, 3), wide)));
    CHECK(std::isfinite(log_likelihood(RegParams(0.01, 0.001, 3), wide)));
}

TEST_CASE("analytic score equals finite differences at random probes") {
    RngState rng(555);
    for (int probe = 0; probe < 20; ++probe) {
        const double alpha = 0.3 + 5.0 * rng.uniform();
        const double theta = 0.1 + 2.0 * rng.uniform();
        const int n = 1 + static_cast<int>(rng.uniform() * 5.0);
        const RegParams truth(alpha, theta, n);
        RngState data_rng(1000 + probe);
        Dataset data("probe", sample_many(truth, 40, data_rng));

        const double jitter_a = alpha * (0.6 + 0.8 * rng.uniform());
        const double jitter_t = theta * (0.6 + 0.8 * rng.uniform());
        const RegParams at(jitter_a, jitter_t, n);
        const auto [da, dt] = score(at, data);
        const auto [fa, ft] = fd_score(at, data);
        const double scale_a = std::max({std::fabs(da), std::fabs(fa), 1e-3});
        const double scale_t = std::max({std::fabs(dt), std::fabs(ft), 1e-3});
        CHECK_MESSAGE(std::fabs(da - fa) <= 1e-6 * scale_a, "probe ", probe);
        CHECK_MESSAGE(std::fabs(dt - ft) <= 1e-6 * scale_t, "probe ", probe);
    }
}

TEST_CASE("score at the exponential sub-model optimum") {
    const Dataset ex3 = load_builtin("ex3");
    const RegParams at(1.0, 1.0 / ex3.mean(), 3);
    const auto [da, dt] = score(at, ex3);
    const auto [fa, ft] = fd_score(at, ex3);
    CHECK(std::fabs(dt - ft) <= 1e-6);
    CHECK(std::fabs(da - fa) <= 1e-6 * std::max(1.0, std::fabs(da)));
}

TEST_CASE("score on a single observation") {
    const Dataset point("point", {1.0});
    const RegParams at(2.0, 1.0, 3);
    const auto [da, dt] = score(at, point);
    const auto [fa, ft] = fd_score(at, point);
    CHECK(da == doctest::Approx(fa).epsilon(1e-6));
    CHECK(dt == doctest::Approx(ft).epsilon(1e-6));
}

TEST_CASE("synthetic recovery at (3, 0.05, 3)") {
    const RegParams truth(3.0, 0.05, 3);
    RngState rng(20240817);
    Dataset data("synthetic", sample_many(truth, 5000, rng));
    const FitResult fit = fit_mle(data, 3);
    CHECK(fit.converged);
    CHECK(fit.gradient_norm <= 1e-6);
    CHECK(std::fabs(fit.params.alpha() - 3.0) <= 0.15);
    CHECK(std::fabs(fit.params.theta() - 0.05) <= 0.0025);
}

TEST_CASE("fit on the relief-time data tracks the sample mean") {
    const Dataset ex3 = load_builtin("ex3");
    const FitResult fit = fit_mle(ex3, 3);
    CHECK(fit.converged);
    CHECK(fit.gradient_norm <= 1e-6);
    const double fitted_mean = raw_moment(fit.params, 1);
    CHECK(std::fabs(fitted_mean - 1.90) <= 0.15 * 1.90);
}

TEST_CASE("degenerate data is rejected") {
    const Dataset flat("flat", {1.0, 1.0, 1.0});
    CHECK_THROWS_AS(fit_mle(flat, 3), data_error);
    const Dataset tiny("tiny", {1.0, 2.0});
    CHECK_THROWS_AS(fit_mle(tiny, 3), data_error);
}

TEST_CASE("fit improves on its initialization and sits at a local maximum") {
    for (const char* label : {"ex2", "ex3"}) {
        const Dataset data = load_builtin(label);
        const double mean = data.mean();
        double ss = 0.0;
        for (double v : data.values()) ss += (v - mean) * (v - mean);
        const double var = ss / (static_cast<double>(data.count()) - 1.0);
        const RegParams init(mean * mean / var, mean / var, 3);

        const FitResult fit = fit_mle(data, 3);
        CHECK(fit.converged);
        const double l_init = log_likelihood(init, data);
        const double l_fit = -fit.neg_log_lik;
        CHECK(l_fit >= l_init);

        const double la = std::log(fit.params.alpha());
        const double lt = std::log(fit.params.theta());
        for (const auto& [da, dt] : std::vector<std::pair<double, double>>{
                 {1e-3, 0.0}, {-1e-3, 0.0}, {0.0, 1e-3}, {0.0, -1e-3}}) {
            const RegParams nudged(std::exp(la + da), std::exp(lt + dt), 3);
            CHECK(log_likelihood(nudged, data) <= l_fit + 1e-9);
        }
    }
}

TEST_CASE("exponential data recovers alpha near 1 and nests the exponential fit") {
    RngState rng(99);
    const RegParams truth(1.0, 0.5, 3);
    Dataset data("expo", sample_many(truth, 3000, rng));
    const FitResult fit = fit_mle(data, 3);
    CHECK(fit.converged);
    CHECK(std::fabs(fit.params.alpha() - 1.0) <= 0.15);
    const double expo_loglik =
        -static_cast<double>(data.count()) * (1.0 + std::log(data.mean()));
    CHECK(-fit.neg_log_lik >= expo_loglik - 1e-9);
}

TEST_CASE("explicit initialization is honored") {
    const Dataset ex3 = load_builtin("ex3");
    const FitResult a = fit_mle(ex3, 3);
    const FitResult b = fit_mle(ex3, 3, std::make_pair(1.5, 0.4));
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(a.params.alpha() == doctest::Approx(b.params.alpha()).epsilon(1e-4));
    CHECK(a.params.theta() == doctest::Approx(b.params.theta()).epsilon(1e-4));
}
