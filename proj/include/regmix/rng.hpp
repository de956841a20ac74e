#pragma once

#include <cstdint>

namespace regmix {

/// Seedable, stream-splittable uniform generator (PCG32, the XSH-RR
/// variant) plus the variate transforms the sampler needs. The output
/// function is pinned here so any implementation can reproduce the
/// streams bit for bit:
///
///   state' = state * 6364136223846793005 + inc,   inc = 2*stream + 1
///   out    = rotr32( ((state >> 18) ^ state) >> 27,  state >> 59 )
///
/// where `state` is the pre-advance value. Seeding: state = 0, advance,
/// state += seed, advance. A uniform double is built from two outputs,
/// w = (first << 32) | second, as u = ((w >> 11) + 0.5) * 2^-53, which
/// lies strictly inside (0, 1). Normals use Box-Muller on two uniforms
/// (the sine companion is discarded); gamma variates use the
/// Marsaglia-Tsang squeeze for every shape, with the shape+1 boost and
/// power correction below shape 1.
class RngState {
  public:
    explicit RngState(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    /// Independent generator with the same seed on another stream.
    RngState with_stream(std::uint64_t stream) const { return RngState(seed_, stream); }

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Standard normal variate.
    double normal();

    /// Exponential variate with the given rate, -ln(u)/rate.
    double exponential(double rate);

    /// Gamma(shape, rate) variate, exact for any shape > 0.
    double gamma(double shape, double rate);

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace regmix
