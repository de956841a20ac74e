#include "regmix/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "regmix/errors.hpp"

namespace regmix {

namespace {

constexpr double kLogRootTwoPi = 0.91893853320467274178;

// Lanczos coefficients, g = 7, kmax = 8.
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

void require_positive(double a, const char* fn) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error(std::string(fn) + ": argument must be positive and finite, got " +
                                std::to_string(a));
    }
}

// Series expansion of P(a, x), valid for x < a + 1.
double lower_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-17) {
            return sum * std::exp(a * std::log(x) - x - log_gamma(a));
        }
    }
    throw numeric_error("reg_lower_gamma: series failed to converge");
}

// Modified Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double upper_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) {
            return h * std::exp(a * std::log(x) - x - log_gamma(a));
        }
    }
    throw numeric_error("reg_upper_gamma: continued fraction failed to converge");
}

}  // namespace

double log_gamma(double a) {
    require_positive(a, "log_gamma");
    if (a == 1.0 || a == 2.0) return 0.0;
    double x = a - 1.0;
    double ag = kLanczos[0];
    for (int k = 1; k <= 8; ++k) ag += kLanczos[k] / (x + k);
    const double t = x + 7.5;
    return (x + 0.5) * std::log(t) - t + kLogRootTwoPi + std::log(ag);
}

double reg_upper_gamma(double a, double x) {
    require_positive(a, "reg_upper_gamma");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error("reg_upper_gamma: x must be finite and >= 0, got " +
                                std::to_string(x));
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - lower_series(a, x);
    return upper_cf(a, x);
}

double reg_lower_gamma(double a, double x) {
    require_positive(a, "reg_lower_gamma");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error("reg_lower_gamma: x must be finite and >= 0, got " +
                                std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_series(a, x);
    return 1.0 - upper_cf(a, x);
}

double digamma(double a) {
    require_positive(a, "digamma");
    // psi(a) = psi(a + 1) - 1/a, lifted until the argument reaches 6.
    double acc = 0.0;
    double z = a;
    while (z < 6.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic expansion with Bernoulli terms through z^-12.
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = std::log(z) - 0.5 * inv;
    series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                      inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    return acc + series;
}

}  // namespace regmix
