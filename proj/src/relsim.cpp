#include "regmix/relsim.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "regmix/distribution.hpp"
#include "regmix/sampler.hpp"

namespace regmix {

namespace {

constexpr std::uint64_t kBlockSize = 65536;

// Counts lifetimes exceeding each threshold; thresholds must be sorted.
std::vector<std::uint64_t> exceedance_counts(const RegParams& params, Topology topology,
                                             std::uint64_t trials, const RngState& rng,
                                             const std::vector<double>& thresholds) {
    std::vector<std::uint64_t> counts(thresholds.size(), 0);
    const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    std::uint64_t done = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        RngState block_rng = rng.with_stream(rng.stream() + b);
        const std::uint64_t todo = std::min(kBlockSize, trials - done);
        for (std::uint64_t i = 0; i < todo; ++i) {
            const double x1 = sample_one(params, block_rng);
            const double x2 = sample_one(params, block_rng);
            const double z =
                (topology == Topology::parallel) ? std::max(x1, x2) : std::min(x1, x2);
            for (std::size_t k = counts.size(); k-- > 0;) {
                if (z > thresholds[k]) {
                    // Sorted thresholds: exceeding this one exceeds all below.
                    for (std::size_t j = 0; j <= k; ++j) ++counts[j];
                    break;
                }
            }
        }
        done += todo;
    }
    return counts;
}

}  // namespace

double system_reliability_exact(const RegParams& params, double t, Topology topology) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::domain_error("system_reliability_exact: t must be nonnegative, got " +
                                std::to_string(t));
    }
    const double r = reliability(params, t);
    return (topology == Topology::parallel) ? 2.0 * r - r * r : r * r;
}

double system_reliability_mc(const RegParams& params, double t, Topology topology,
                             std::uint64_t trials, const RngState& rng) {
    if (trials < 1) throw std::domain_error("system_reliability_mc: trials must be >= 1");
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::domain_error("system_reliability_mc: t must be nonnegative, got " +
                                std::to_string(t));
    }
    const auto counts = exceedance_counts(params, topology, trials, rng, {t});
    return static_cast<double>(counts[0]) / static_cast<double>(trials);
}

std::vector<ReliabilityRow> reliability_table(const RegParams& params, double t_max, double step,
                                              Topology topology, std::uint64_t trials,
                                              const RngState& rng) {
    if (!(step > 0.0) || !(t_max >= step)) {
        throw std::domain_error("reliability_table: need step > 0 and t_max >= step");
    }
    if (trials < 1) throw std::domain_error("reliability_table: trials must be >= 1");

    std::vector<double> grid;
    for (double t = 0.0; t <= t_max + 1e-9 * step; t += step) grid.push_back(std::min(t, t_max));

    const auto counts = exceedance_counts(params, topology, trials, rng, grid);
    std::vector<ReliabilityRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double exact = system_reliability_exact(params, grid[i], topology);
        const double estimate = static_cast<double>(counts[i]) / static_cast<double>(trials);
        rows.push_back(ReliabilityRow{grid[i], exact, estimate, std::fabs(exact - estimate)});
    }
    return rows;
}

void write_reliability_csv(const std::vector<ReliabilityRow>& rows, std::ostream& out) {
    out << "t,exact,estimate,abs_error\n";
    for (const auto& row : rows) {
        out << std::defaultfloat << row.t << ',' << std::fixed << std::setprecision(6)
            << row.exact << ',' << row.estimate << ',' << row.abs_error << '\n';
    }
}

}  // namespace regmix
