#pragma once

#include <cstddef>
#include <vector>

#include "regmix/params.hpp"
#include "regmix/rng.hpp"

namespace regmix {

/// One draw plus the branch that produced it, for branch-frequency checks.
struct SampleTrace {
    double value;
    bool exponential_branch;
};

/// Draws u ~ U(0,1); u <= p_n takes the exponential(theta) branch,
/// otherwise the gamma(alpha, theta) branch. The boundary u == p_n
/// belongs to the exponential branch.
SampleTrace sample_one_traced(const RegParams& params, RngState& rng);

/// Single variate from the mixture.
double sample_one(const RegParams& params, RngState& rng);

/// `count` variates in draw order; deterministic for a fixed RngState.
std::vector<double> sample_many(const RegParams& params, std::size_t count, RngState& rng);

}  // namespace regmix
