#include "regmix/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace regmix {

namespace {
constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
}

RngState::RngState(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u), seed_(seed), stream_(stream) {
    next_u32();
    state_ += seed;
    next_u32();
}

std::uint32_t RngState::next_u32() {
    const std::uint64_t old = state_;
    state_ = old * kMultiplier + inc_;
    const std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngState::next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32u) | lo;
}

double RngState::uniform() {
    return (static_cast<double>(next_u64() >> 11u) + 0.5) * 0x1.0p-53;
}

double RngState::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngState::exponential(double rate) {
    if (!(rate > 0.0)) {
        throw std::domain_error("RngState::exponential: rate must be positive, got " +
                                std::to_string(rate));
    }
    return -std::log(uniform()) / rate;
}

double RngState::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
        throw std::domain_error("RngState::gamma: shape and rate must be positive");
    }
    if (shape < 1.0) {
        // Boost to shape+1 and correct with u^(1/shape).
        const double boosted = gamma(shape + 1.0, rate);
        return boosted * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

}  // namespace regmix
