#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "regmix/dataset.hpp"
#include "regmix/errors.hpp"

using namespace regmix;

TEST_CASE("builtin datasets load with verified counts and checksums") {
    const Dataset ex1 = load_builtin("ex1");
    CHECK(ex1.count() == 100);
    CHECK(ex1.sum() == doctest::Approx(987.7).epsilon(1e-12));

    const Dataset ex2 = load_builtin("ex2");
    CHECK(ex2.count() == 23);
    CHECK(ex2.sum() == doctest::Approx(1661.28).epsilon(1e-12));
    CHECK(ex2.mean() == doctest::Approx(72.2295652173913).epsilon(1e-12));

    const Dataset ex3 = load_builtin("ex3");
    CHECK(ex3.count() == 20);
    CHECK(ex3.sum() == doctest::Approx(38.0).epsilon(1e-12));
    CHECK(ex3.mean() == doctest::Approx(1.90).epsilon(1e-12));

    const Dataset ex4 = load_builtin("ex4");
    CHECK(ex4.count() == 31);
    CHECK(ex4.sum() == doctest::Approx(955.154).epsilon(1e-12));

    CHECK(builtin_labels().size() == 4);
}

TEST_CASE("unknown builtin label") {
    CHECK_THROWS_AS(load_builtin("ex5"), std::out_of_range);
    CHECK_THROWS_AS(load_builtin(""), std::out_of_range);
}

TEST_CASE("parse_values basics") {
    const Dataset a = parse_values("1.0\n2.0\n", "t");
    CHECK(a.values() == std::vector<double>{1.0, 2.0});

    const Dataset b = parse_values("# c\n3.5\n", "t");
    CHECK(b.values() == std::vector<double>{3.5});

    const Dataset c = parse_values("  1.5 \r\n\n# note\n2.25", "t");
    CHECK(c.values() == std::vector<double>{1.5, 2.25});
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_values("abc\n", "t");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_values("1.0\n2.0 is big\n", "t");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_values("1.0\n-2.0\n", "t"), data_error);
    CHECK_THROWS_AS(parse_values("0\n", "t"), data_error);
    CHECK_THROWS_AS(parse_values("", "t"), data_error);
    CHECK_THROWS_AS(parse_values("inf\n", "t"), data_error);
}

TEST_CASE("file round trip is identity") {
    const Dataset original = load_builtin("ex3");
    const std::string path = "test_dataset_roundtrip.txt";
    {
        std::ofstream out(path);
        original.write_values(out);
    }
    const Dataset reloaded = load_file(path);
    CHECK(reloaded.values() == original.values());
    std::remove(path.c_str());
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_file("no_such_file_here.txt"), data_error);
}
