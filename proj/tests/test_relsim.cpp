#include <cmath>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "regmix/distribution.hpp"
#include "regmix/relsim.hpp"

using namespace regmix;

TEST_CASE("exact system reliability") {
    const RegParams params(3.0, 0.05, 3);
    CHECK(system_reliability_exact(params, 0.0, Topology::parallel) == 1.0);
    CHECK(system_reliability_exact(params, 0.0, Topology::series) == 1.0);
    CHECK(system_reliability_exact(params, 50.0, Topology::parallel) ==
          doctest::Approx(0.79184803581480482).epsilon(1e-12));
    CHECK(system_reliability_exact(params, 50.0, Topology::series) ==
          doctest::Approx(0.29567848142485725).epsilon(1e-12));
    // Independent exponentials in series: e^{-2 theta t}.
    const RegParams expo(1.0, 0.3, 2);
    for (double t : {0.5, 2.0, 7.0}) {
        CHECK(system_reliability_exact(expo, t, Topology::series) ==
              doctest::Approx(std::exp(-2.0 * 0.3 * t)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(system_reliability_exact(params, -1.0, Topology::parallel),
                    std::domain_error);
}

TEST_CASE("parallel formula equals the complement identity") {
    for (double alpha : {0.5, 1.0, 3.0}) {
        const RegParams params(alpha, 0.4, 3);
        for (double t = 0.0; t <= 20.0; t += 0.5) {
            const double r = reliability(params, t);
            const double direct = system_reliability_exact(params, t, Topology::parallel);
            const double complement = 1.0 - (1.0 - r) * (1.0 - r);
            CHECK(std::fabs(direct - complement) <= 1e-14);
        }
    }
}

TEST_CASE("Monte Carlo estimate at t = 0 is exactly one") {
    const RegParams params(3.0, 0.05, 3);
    CHECK(system_reliability_mc(params, 0.0, Topology::parallel, 10000, RngState(5)) == 1.0);
    CHECK(system_reliability_mc(params, 0.0, Topology::series, 10000, RngState(5)) == 1.0);
}

TEST_CASE("Monte Carlo estimate concentrates around the exact value") {
    const RegParams params(3.0, 0.05, 3);
    const std::uint64_t trials = 1000000;
    const double exact = system_reliability_exact(params, 50.0, Topology::parallel);
    const double estimate =
        system_reliability_mc(params, 50.0, Topology::parallel, trials, RngState(1234));
    const double band = 3.0 * std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    CHECK(std::fabs(estimate - exact) <= band);
}

TEST_CASE("series never exceeds parallel on the same draws") {
    const RegParams params(3.0, 0.05, 3);
    for (double t : {10.0, 40.0, 80.0}) {
        const double series =
            system_reliability_mc(params, t, Topology::series, 200000, RngState(99, 7));
        const double parallel =
            system_reliability_mc(params, t, Topology::parallel, 200000, RngState(99, 7));
        CHECK(series <= parallel);
    }
}

TEST_CASE("block substreams make the estimate merge-independent") {
    const RegParams params(2.0, 0.5, 3);
    const double whole =
        system_reliability_mc(params, 3.0, Topology::parallel, 131072, RngState(42, 10));
    const double first =
        system_reliability_mc(params, 3.0, Topology::parallel, 65536, RngState(42, 10));
    const double second =
        system_reliability_mc(params, 3.0, Topology::parallel, 65536, RngState(42, 11));
    CHECK(whole == 0.5 * (first + second));
}

TEST_CASE("reliability table grid and error bounds") {
    const RegParams params(3.0, 0.05, 3);
    const std::uint64_t trials = 200000;
    const auto rows = reliability_table(params, 100.0, 10.0, Topology::parallel, trials,
                                        RngState(2025));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0].t == 0.0);
    CHECK(rows[0].exact == 1.0);
    CHECK(rows[0].estimate == 1.0);
    CHECK(rows[0].abs_error == 0.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].exact < rows[i - 1].exact);
        const double bound =
            3.0 * std::sqrt(rows[i].exact * (1.0 - rows[i].exact) / trials) + 1.0 / trials;
        CHECK_MESSAGE(rows[i].abs_error <= bound, "t = ", rows[i].t);
        CHECK(rows[i].abs_error == std::fabs(rows[i].exact - rows[i].estimate));
    }
    CHECK_THROWS_AS(reliability_table(params, 100.0, 0.0, Topology::parallel, 10, RngState(1)),
                    std::domain_error);
}

TEST_CASE("doubling trials does not increase bound violations") {
    const RegParams params(3.0, 0.05, 3);
    const auto violations = [&](std::uint64_t trials) {
        const auto rows = reliability_table(params, 100.0, 10.0, Topology::parallel, trials,
                                            RngState(17));
        int count = 0;
        for (const auto& row : rows) {
            const double bound =
                3.0 * std::sqrt(row.exact * (1.0 - row.exact) / static_cast<double>(trials)) +
                1.0 / static_cast<double>(trials);
            count += (row.abs_error > bound) ? 1 : 0;
        }
        return count;
    };
    CHECK(violations(100000) <= violations(50000));
}

TEST_CASE("csv rendering") {
    const RegParams params(3.0, 0.05, 3);
    const auto rows =
        reliability_table(params, 20.0, 10.0, Topology::parallel, 1000, RngState(8));
    std::ostringstream out;
    write_reliability_csv(rows, out);
    const std::string text = out.str();
    CHECK(text.rfind("t,exact,estimate,abs_error\n", 0) == 0);
    CHECK(text.find("0,1.000000,1.000000,0.000000\n") != std::string::npos);
    CHECK(text.find("10,") != std::string::npos);
    CHECK(text.find("20,") != std::string::npos);
}
