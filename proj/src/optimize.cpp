#include "regmix/optimize.hpp"

#include <cmath>
#include <limits>

namespace regmix {

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<double>;  // row-major k x k

double norm(const Vec& v) {
    double s = 0.0;
    for (double a : v) s += a * a;
    return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Cholesky factorization of a symmetric matrix; false if not positive definite.
bool cholesky(Mat a, std::size_t k, Mat& lower) {
    lower.assign(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i * k + j];
            for (std::size_t m = 0; m < j; ++m) s -= lower[i * k + m] * lower[j * k + m];
            if (i == j) {
                if (!(s > 0.0)) return false;
                lower[i * k + i] = std::sqrt(s);
            } else {
                lower[i * k + j] = s / lower[j * k + j];
            }
        }
    }
    return true;
}

// Solves (L L^T) x = b given the Cholesky factor.
Vec cholesky_solve(const Mat& lower, std::size_t k, Vec b) {
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) b[i] -= lower[i * k + j] * b[j];
        b[i] /= lower[i * k + i];
    }
    for (std::size_t i = k; i-- > 0;) {
        for (std::size_t j = i + 1; j < k; ++j) b[i] -= lower[j * k + i] * b[j];
        b[i] /= lower[i * k + i];
    }
    return b;
}

Mat fd_hessian(const GradientFn& gradient, const Vec& x) {
    const std::size_t k = x.size();
    Mat h(k * k, 0.0);
    const double root_eps = std::cbrt(std::numeric_limits<double>::epsilon());
    for (std::size_t j = 0; j < k; ++j) {
        const double step = root_eps * std::max(1.0, std::fabs(x[j]));
        Vec xp = x;
        Vec xm = x;
        xp[j] += step;
        xm[j] -= step;
        const Vec gp = gradient(xp);
        const Vec gm = gradient(xm);
        for (std::size_t i = 0; i < k; ++i) h[i * k + j] = (gp[i] - gm[i]) / (2.0 * step);
    }
    // Symmetrize.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double m = 0.5 * (h[i * k + j] + h[j * k + i]);
            h[i * k + j] = m;
            h[j * k + i] = m;
        }
    }
    return h;
}

// Inverse-Hessian BFGS update for the minimization of -f; keeps the
// approximation positive definite by skipping non-curving pairs.
void bfgs_update(Mat& binv, std::size_t k, const Vec& s, const Vec& y_ascent) {
    Vec y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = -y_ascent[i];
    const double sy = dot(s, y);
    if (!(sy > 1e-12 * norm(s) * norm(y))) return;
    const double rho = 1.0 / sy;
    Vec by(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) by[i] += binv[i * k + j] * y[j];
    }
    const double yby = dot(y, by);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            binv[i * k + j] += (1.0 + rho * yby) * rho * s[i] * s[j] -
                               rho * (s[i] * by[j] + by[i] * s[j]);
        }
    }
}

}  // namespace

std::vector<double> numeric_gradient(const ObjectiveFn& f, const std::vector<double>& x) {
    const std::size_t k = x.size();
    Vec g(k, 0.0);
    const double root_eps = std::cbrt(std::numeric_limits<double>::epsilon());
    for (std::size_t j = 0; j < k; ++j) {
        const double step = root_eps * std::max(1.0, std::fabs(x[j]));
        Vec xp = x;
        Vec xm = x;
        xp[j] += step;
        xm[j] -= step;
        g[j] = (f(xp) - f(xm)) / (2.0 * step);
    }
    return g;
}

MaximizeResult maximize(const ObjectiveFn& value, const GradientFn& gradient,
                        const GradientFn& report_gradient, std::vector<double> x0,
                        const MaximizeOptions& options) {
    const std::size_t k = x0.size();
    MaximizeResult result;
    result.x = std::move(x0);
    result.value = value(result.x);
    if (!std::isfinite(result.value)) {
        result.message = "objective not finite at the initial point";
        result.gradient_norm = std::numeric_limits<double>::infinity();
        return result;
    }

    // BFGS inverse-Hessian approximation, engaged when the finite-difference
    // Hessian is not usable for a Newton step.
    Mat binv(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) binv[i * k + i] = 1.0;

    Vec grad = gradient(result.x);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        const Vec rep = report_gradient(result.x);
        result.gradient_norm = norm(rep);
        result.iterations = iter;
        if (result.gradient_norm <= options.gradient_tolerance) {
            result.converged = true;
            return result;
        }

        // Newton direction from -H when negative definite, BFGS otherwise.
        Vec direction;
        Mat hess = fd_hessian(gradient, result.x);
        Mat neg(k * k);
        for (std::size_t i = 0; i < k * k; ++i) neg[i] = -hess[i];
        Mat lower;
        if (cholesky(neg, k, lower)) {
            direction = cholesky_solve(lower, k, grad);
        } else {
            direction.assign(k, 0.0);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) direction[i] += binv[i * k + j] * grad[j];
            }
        }
        if (!(dot(direction, grad) > 0.0)) direction = grad;  // ascent safeguard

        // Step halving until the objective does not decrease.
        double t = 1.0;
        bool accepted = false;
        Vec xt(k);
        double ft = 0.0;
        const double floor = result.value - 4.0 * std::fabs(result.value) *
                                                std::numeric_limits<double>::epsilon();
        for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
            for (std::size_t i = 0; i < k; ++i) xt[i] = result.x[i] + t * direction[i];
            ft = value(xt);
            if (std::isfinite(ft) && ft >= floor) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            result.message = "line search stalled";
            return result;
        }

        Vec grad_new = gradient(xt);
        Vec s(k);
        Vec y(k);
        for (std::size_t i = 0; i < k; ++i) {
            s[i] = xt[i] - result.x[i];
            y[i] = grad_new[i] - grad[i];
        }
        bfgs_update(binv, k, s, y);
        result.x = xt;
        result.value = ft;
        grad = std::move(grad_new);
    }

    const Vec rep = report_gradient(result.x);
    result.gradient_norm = norm(rep);
    result.iterations = options.max_iterations;
    result.converged = result.gradient_norm <= options.gradient_tolerance;
    if (!result.converged) result.message = "iteration limit reached";
    return result;
}

}  // namespace regmix
