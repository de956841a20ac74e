#include "regmix/sampler.hpp"

#include <stdexcept>

namespace regmix {

SampleTrace sample_one_traced(const RegParams& params, RngState& rng) {
    const double u = rng.uniform();
    if (u <= params.weight()) {
        return SampleTrace{rng.exponential(params.theta()), true};
    }
    return SampleTrace{rng.gamma(params.alpha(), params.theta()), false};
}

double sample_one(const RegParams& params, RngState& rng) {
    return sample_one_traced(params, rng).value;
}

std::vector<double> sample_many(const RegParams& params, std::size_t count, RngState& rng) {
    if (count == 0) throw std::domain_error("sample_many: count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(params, rng));
    return out;
}

}  // namespace regmix
