#include "regmix/dataset.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "regmix/errors.hpp"

namespace regmix {

namespace {

struct BuiltinEntry {
    const char* label;
    std::size_t count;
    double checksum;  // exact decimal sum of the listed values
    const char* text;
};

// Waiting time (minutes) of 100 bank customers before service.
constexpr const char* kEx1 = R"(0.8
0.8
1.3
1.5
1.8
1.9
1.9
2.1
2.6
2.7
2.9
3.1
3.2
3.3
3.5
3.6
4.0
4.1
4.2
4.2
4.3
4.3
4.4
4.4
4.6
4.7
4.7
4.8
4.9
4.9
5.0
5.3
5.5
5.7
5.7
6.1
6.2
6.2
6.2
6.3
6.7
6.9
7.1
7.1
7.1
7.1
7.4
7.6
7.7
8.0
8.2
8.6
8.6
8.6
8.8
8.8
8.9
8.9
9.5
9.6
9.7
9.8
10.7
10.9
11.0
11.0
11.1
11.2
11.2
11.5
11.9
12.4
12.5
12.9
13.0
13.1
13.3
13.6
13.7
13.9
14.1
15.4
15.4
17.3
17.3
18.1
18.2
18.4
18.9
19.0
19.9
20.6
21.3
21.4
21.9
23.0
27.0
31.6
33.1
38.5
)";

// Millions of revolutions before failure for 23 deep groove ball bearings.
constexpr const char* kEx2 = R"(17.88
28.92
33.00
41.52
42.12
45.60
48.80
51.84
51.96
54.12
55.56
67.80
68.44
68.64
68.88
84.12
93.12
98.64
105.12
105.84
127.92
128.04
173.40
)";

// Relief times (minutes) for 20 patients receiving an analgesic.
constexpr const char* kEx3 = R"(1.1
1.4
1.3
1.7
1.9
1.8
1.6
2.2
1.7
2.7
4.1
1.8
1.5
1.2
1.4
3
1.7
2.3
1.6
2
)";

// Strength of 31 aircraft window glass specimens.
constexpr const char* kEx4 = R"(18.83
20.8
21.657
23.03
23.23
24.05
24.321
25.5
25.52
25.8
26.69
26.77
26.78
27.05
27.67
29.9
31.11
33.2
33.73
33.76
33.89
34.76
35.75
35.91
36.98
37.08
37.09
39.58
44.045
45.29
45.381
)";

constexpr std::array<BuiltinEntry, 4> kBuiltins = {{
    {"ex1", 100, 987.7, kEx1},
    {"ex2", 23, 1661.28, kEx2},
    {"ex3", 20, 38.0, kEx3},
    {"ex4", 31, 955.154, kEx4},
}};

}  // namespace

Dataset::Dataset(std::string label, std::vector<double> values)
    : label_(std::move(label)), values_(std::move(values)) {
    if (values_.empty()) throw data_error("Dataset '" + label_ + "': no observations");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
            throw data_error("Dataset '" + label_ + "': observation " + std::to_string(i + 1) +
                             " is not a positive finite value");
        }
    }
}

double Dataset::sum() const noexcept {
    double total = 0.0;
    for (double v : values_) total += v;
    return total;
}

void Dataset::write_values(std::ostream& out) const {
    out.precision(std::numeric_limits<double>::max_digits10);
    for (double v : values_) out << v << '\n';
}

Dataset parse_values(std::string_view text, const std::string& label) {
    std::vector<double> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        // Trim whitespace (tolerates CRLF input).
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        while (!line.empty() &&
               (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') continue;

        const std::string token(line);
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size()) {
            throw parse_error("cannot parse '" + token + "' as a decimal value", line_no);
        }
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw data_error(label + ": non-positive value " + token + " at line " +
                             std::to_string(line_no));
        }
        values.push_back(v);
    }
    return Dataset(label, std::move(values));
}

std::vector<std::string> builtin_labels() {
    std::vector<std::string> labels;
    for (const auto& e : kBuiltins) labels.emplace_back(e.label);
    return labels;
}

Dataset load_builtin(const std::string& label) {
    for (const auto& e : kBuiltins) {
        if (label != e.label) continue;
        Dataset ds = parse_values(e.text, e.label);
        if (ds.count() != e.count) {
            throw data_error("builtin '" + label + "' corrupt: expected " +
                             std::to_string(e.count) + " values, found " +
                             std::to_string(ds.count()));
        }
        if (std::fabs(ds.sum() - e.checksum) > 1e-9) {
            throw data_error("builtin '" + label + "' corrupt: checksum " +
                             std::to_string(ds.sum()) + " != " + std::to_string(e.checksum));
        }
        return ds;
    }
    throw std::out_of_range("unknown builtin dataset '" + label +
                            "' (available: ex1, ex2, ex3, ex4)");
}

Dataset load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_values(buf.str(), path);
}

}  // namespace regmix
