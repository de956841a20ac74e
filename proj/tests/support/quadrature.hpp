#pragma once

#include <cmath>
#include <functional>
#include <numbers>

// Double-exponential quadrature oracles for the tests. These deliberately
// share no code with the library's closed forms: trapezoid sums under
// exp-sinh / tanh-sinh changes of variable, with level halving until two
// successive refinements agree.

namespace testsupport {

namespace detail {

inline double de_sum(const std::function<double(double)>& g, double rel_tol, int max_level) {
    const double t_max = 6.5;
    auto eval_row = [&](double h, bool odd_only) {
        double s = 0.0;
        const int kmax = static_cast<int>(t_max / h);
        for (int k = odd_only ? 1 : 0; k <= kmax; k += odd_only ? 2 : 1) {
            s += g(k * h);
            if (k != 0) s += g(-k * h);
        }
        return s;
    };
    double h = 1.0;
    double sum = eval_row(h, false);
    double integral = h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += eval_row(h, true);
        const double next = h * sum;
        if (level >= 3 && std::fabs(next - integral) <= rel_tol * std::fabs(next)) {
            return next;
        }
        integral = next;
    }
    return integral;
}

}  // namespace detail

// Integral over (0, inf); handles power-law endpoints at 0 and exponential
// decay at infinity (exp-sinh rule).
inline double integrate_zero_inf(const std::function<double(double)>& f,
                                 double rel_tol = 1e-12) {
    auto g = [&](double t) {
        const double e = (std::numbers::pi / 2.0) * std::sinh(t);
        if (std::fabs(e) > 690.0) return 0.0;
        const double x = std::exp(e);
        const double w = x * (std::numbers::pi / 2.0) * std::cosh(t);
        const double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };
    return detail::de_sum(g, rel_tol, 10);
}

// Integral over (a, inf) for integrands decaying at infinity.
inline double integrate_to_inf(const std::function<double(double)>& f, double a,
                               double rel_tol = 1e-12) {
    return integrate_zero_inf([&](double u) { return f(a + u); }, rel_tol);
}

// Integral over a finite interval (tanh-sinh rule; endpoint singular OK).
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12) {
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    auto g = [&](double t) {
        const double e = (std::numbers::pi / 2.0) * std::sinh(t);
        if (std::fabs(e) > 690.0) return 0.0;
        const double ch = std::cosh(e);
        const double x = c + d * std::tanh(e);
        if (x <= a || x >= b) return 0.0;
        const double w = d * (std::numbers::pi / 2.0) * std::cosh(t) / (ch * ch);
        const double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };
    return detail::de_sum(g, rel_tol, 10);
}

}  // namespace testsupport
