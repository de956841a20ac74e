#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "regmix/params.hpp"
#include "regmix/rng.hpp"

namespace regmix {

/// Two-component system layout: parallel survives while either component
/// does (lifetime = max), series only while both do (lifetime = min).
enum class Topology { parallel, series };

struct ReliabilityRow {
    double t;
    double exact;
    double estimate;
    double abs_error;
};

/// Closed-form system reliability from the component law:
/// parallel 2R - R^2, series R^2.
double system_reliability_exact(const RegParams& params, double t, Topology topology);

/// Monte Carlo estimate from `trials` simulated component pairs. Trials are
/// generated in fixed blocks of 65536 on consecutive RNG streams starting
/// at rng.stream(), so the result is independent of how blocks are merged.
double system_reliability_mc(const RegParams& params, double t, Topology topology,
                             std::uint64_t trials, const RngState& rng);

/// Grid t = 0, step, 2*step, ... <= t_max; one set of simulated lifetimes
/// is reused for every grid point.
std::vector<ReliabilityRow> reliability_table(const RegParams& params, double t_max, double step,
                                              Topology topology, std::uint64_t trials,
                                              const RngState& rng);

/// CSV with header `t,exact,estimate,abs_error`, six decimal places.
void write_reliability_csv(const std::vector<ReliabilityRow>& rows, std::ostream& out);

}  // namespace regmix
