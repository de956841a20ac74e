#pragma once

#include <vector>

#include "regmix/params.hpp"

namespace regmix {

/// The m-fold i.i.d. sum is a binomial-weighted mixture of gamma laws:
/// component k (k = 0..m) has weight C(m,k) p_n^(m-k) (1-p_n)^k and shape
/// m + k(alpha - 1) at the common rate theta.
struct SumComponent {
    double weight;
    double shape;
    double rate;
};

struct SumDistSpec {
    int m = 0;
    std::vector<SumComponent> components;
};

/// Builds the mixture for m terms; weights are formed in log space.
/// m is capped at 10000.
SumDistSpec sum_spec(const RegParams& params, int m);

/// Re-sums the mixture weights (should be 1 up to rounding).
double total_weight(const SumDistSpec& spec);

/// Density of the sum at s > 0.
double sum_pdf(const SumDistSpec& spec, double s);

/// CDF of the sum via regularized lower incomplete gammas.
double sum_cdf(const SumDistSpec& spec, double s);

/// MGF of the mixture at t < rate.
double sum_mgf(const SumDistSpec& spec, double t);

}  // namespace regmix
