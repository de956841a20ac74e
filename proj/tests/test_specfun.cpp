#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "regmix/specfun.hpp"

using regmix::digamma;
using regmix::log_gamma;
using regmix::reg_lower_gamma;
using regmix::reg_upper_gamma;

namespace {

// Log-spaced grid over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g;
    const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
    double x = lo;
    for (int i = 0; i < points; ++i, x *= ratio) g.push_back(x);
    return g;
}

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

}  // namespace

TEST_CASE("log_gamma known values") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    // ln Gamma(1/2) = ln sqrt(pi)
    CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-14));
}

TEST_CASE("log_gamma matches the extended-precision library oracle on a grid") {
    for (double a : log_grid(1e-3, 1e3, 400)) {
        const long double want = lgammal(static_cast<long double>(a));
        CHECK_MESSAGE(rel_err(log_gamma(a), static_cast<double>(want)) < 1e-12, "a = ", a);
    }
}

TEST_CASE("log_gamma recurrence") {
    for (double a : log_grid(1e-3, 5e2, 200)) {
        const double lhs = log_gamma(a + 1.0);
        const double rhs = log_gamma(a) + std::log(a);
        CHECK_MESSAGE(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)), "a = ", a);
    }
}

TEST_CASE("log_gamma domain errors") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("reg_upper_gamma exponential tail at a = 1") {
    for (double x : {0.0, 0.05, 0.7, 1.0, 3.0, 12.0, 90.0}) {
        CHECK(reg_upper_gamma(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
    }
}

TEST_CASE("reg_upper_gamma integer-shape closed form") {
    // Q(3, 2.5) = e^{-2.5} (1 + 2.5 + 2.5^2/2)
    const double want = std::exp(-2.5) * (1.0 + 2.5 + 3.125);
    CHECK(reg_upper_gamma(3.0, 2.5) == doctest::Approx(want).epsilon(1e-14));
    CHECK(reg_upper_gamma(3.0, 2.5) == doctest::Approx(0.543813115883329518).epsilon(1e-13));
    // Q(4, 7) = e^{-7} (1 + 7 + 24.5 + 57.1666...)
    const double q47 = std::exp(-7.0) * (1.0 + 7.0 + 24.5 + 343.0 / 6.0);
    CHECK(reg_upper_gamma(4.0, 7.0) == doctest::Approx(q47).epsilon(1e-13));
}

TEST_CASE("reg_upper_gamma boundary and monotonicity") {
    CHECK(reg_upper_gamma(2.0, 0.0) == 1.0);
    for (double a : {1e-3, 0.4, 1.0, 2.7, 31.0, 1e3}) {
        double prev = 1.0;
        for (double x : log_grid(1e-6, 1e3, 120)) {
            const double q = reg_upper_gamma(a, x);
            CHECK(q <= prev + 1e-15);
            CHECK(q >= 0.0);
            CHECK(q <= 1.0);
            prev = q;
        }
    }
}

TEST_CASE("upper and lower tails sum to one") {
    for (double a : {1e-3, 0.2, 1.0, 3.0, 47.0, 1e3}) {
        for (double x : log_grid(1e-4, 1e3, 80)) {
            const double q = reg_upper_gamma(a, x);
            const double p = reg_lower_gamma(a, x);
            CHECK_MESSAGE(std::fabs(p + q - 1.0) <= 1e-12, "a = ", a, ", x = ", x);
        }
    }
}

TEST_CASE("d/dx Q(a,x) equals the negative gamma density") {
    for (double a : {0.5, 1.0, 2.0, 3.0, 8.0}) {
        for (double x : log_grid(0.05, 40.0, 30)) {
            const double want = -std::exp((a - 1.0) * std::log(x) - x - log_gamma(a));
            // Below this the difference quotient is dominated by rounding noise.
            if (std::fabs(want) < 1e-3) continue;
            const double h = 3e-7 * std::max(1.0, x);
            const double fd = (reg_upper_gamma(a, x + h) - reg_upper_gamma(a, x - h)) / (2.0 * h);
            CHECK_MESSAGE(std::fabs(fd - want) <= 1e-6 * std::fabs(want), "a = ", a, ", x = ", x);
        }
    }
}

TEST_CASE("reg_upper_gamma domain errors") {
    CHECK_THROWS_AS(reg_upper_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_upper_gamma(-2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_upper_gamma(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(reg_upper_gamma(1.0, std::nan("")), std::domain_error);
}

TEST_CASE("digamma known values") {
    CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286061).epsilon(1e-11));
    CHECK(digamma(2.0) == doctest::Approx(0.42278433509846713939).epsilon(1e-11));
    CHECK(digamma(0.001) == doctest::Approx(-1000.5755719318103707).epsilon(1e-11));
    CHECK(digamma(1000.0) == doctest::Approx(6.9072551956488117101).epsilon(1e-11));
}

TEST_CASE("digamma recurrence") {
    for (double a : log_grid(1e-3, 1e3, 300)) {
        const double lhs = digamma(a + 1.0);
        const double rhs = digamma(a) + 1.0 / a;
        CHECK_MESSAGE(std::fabs(lhs - rhs) <= 1e-10 * std::max(1.0, std::fabs(lhs)), "a = ", a);
    }
}

TEST_CASE("digamma matches a central difference of log_gamma") {
    const double h = 1e-5;
    const double fd = (log_gamma(10.0 + h) - log_gamma(10.0 - h)) / (2.0 * h);
    CHECK(digamma(10.0) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("digamma domain errors") {
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
}
