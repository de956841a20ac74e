// regmix command-line tool: fitting, sampling, curve export, reliability
// tables and model-comparison reports for the recursive exponential-gamma
// mixture lifetime model.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "regmix/competitors.hpp"
#include "regmix/dataset.hpp"
#include "regmix/distribution.hpp"
#include "regmix/errors.hpp"
#include "regmix/estimator.hpp"
#include "regmix/gof.hpp"
#include "regmix/relsim.hpp"
#include "regmix/rng.hpp"
#include "regmix/sampler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Every subcommand renders its full output first; files are only opened
// after all computation has succeeded.
void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw regmix::data_error("cannot open output file '" + output_path + "'");
    out << text;
    if (!out) throw regmix::data_error("failed writing output file '" + output_path + "'");
}

regmix::Dataset load_data(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return regmix::load_builtin(source.substr(8));
    return regmix::load_file(source);
}

nlohmann::ordered_json fit_result_json(const regmix::FitResult& fit) {
    nlohmann::ordered_json j;
    j["model"] = "regmix";
    j["alpha"] = fit.params.alpha();
    j["theta"] = fit.params.theta();
    j["n"] = fit.params.depth();
    j["neg_log_lik"] = fit.neg_log_lik;
    j["gradient_norm"] = fit.gradient_norm;
    j["iterations"] = fit.iterations;
    j["converged"] = fit.converged;
    j["messages"] = fit.messages;
    return j;
}

nlohmann::ordered_json comp_result_json(const regmix::CompFitResult& fit) {
    nlohmann::ordered_json j;
    j["model"] = regmix::family_name(fit.model.family);
    const auto names = regmix::param_names(fit.model.family);
    for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = fit.model.params[i];
    j["neg_log_lik"] = fit.neg_log_lik;
    j["gradient_norm"] = fit.gradient_norm;
    j["iterations"] = fit.iterations;
    j["converged"] = fit.converged;
    j["messages"] = fit.messages;
    return j;
}

std::string key_value_table(const nlohmann::ordered_json& j) {
    std::ostringstream out;
    for (const auto& [key, value] : j.items()) {
        out << std::left << std::setw(14) << key;
        if (value.is_number_float()) {
            out << std::fixed << std::setprecision(6) << value.get<double>();
        } else {
            out << value.dump();
        }
        out << "\n";
    }
    return out.str();
}

struct FitOptions {
    std::string data;
    std::string model = "all";
    int n = regmix::RegParams::kDefaultDepth;
    std::string format = "table";
    std::string output;
};

int run_fit(const FitOptions& opt) {
    const regmix::Dataset data = load_data(opt.data);
    std::string text;
    if (opt.model == "all") {
        const regmix::GofReport report = regmix::build_report(data, opt.n);
        text = (opt.format == "json") ? regmix::report_to_json(report)
                                      : regmix::report_to_table(report);
    } else if (opt.model == "reg") {
        const auto j = fit_result_json(regmix::fit_mle(data, opt.n));
        text = (opt.format == "json") ? j.dump(2) + "\n" : key_value_table(j);
    } else {
        regmix::Family family = regmix::Family::QL;
        if (opt.model == "gl3") family = regmix::Family::GL3;
        if (opt.model == "expgl") family = regmix::Family::EXPGL;
        if (opt.model == "ngl") family = regmix::Family::NGL;
        const auto j = comp_result_json(regmix::comp_fit(family, data));
        text = (opt.format == "json") ? j.dump(2) + "\n" : key_value_table(j);
    }
    emit(text, opt.output);
    return kExitOk;
}

struct SampleOptions {
    double alpha = 0.0;
    double theta = 0.0;
    int n = regmix::RegParams::kDefaultDepth;
    std::uint64_t count = 0;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    std::string output;
};

int run_sample(const SampleOptions& opt) {
    const regmix::RegParams params(opt.alpha, opt.theta, opt.n);
    regmix::RngState rng(opt.seed, opt.stream);
    const auto values = regmix::sample_many(params, opt.count, rng);
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    for (double v : values) out << v << '\n';
    emit(out.str(), opt.output);
    return kExitOk;
}

struct CurveOptions {
    std::string what;
    double alpha = 0.0;
    double theta = 0.0;
    int n = regmix::RegParams::kDefaultDepth;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    std::string output;
};

int run_curve(const CurveOptions& opt) {
    const regmix::RegParams params(opt.alpha, opt.theta, opt.n);
    if (!(opt.max > opt.min)) throw CLI::ValidationError("--max", "grid needs max > min");
    const bool needs_positive = (opt.what == "pdf" || opt.what == "hazard");
    if (needs_positive && !(opt.min > 0.0)) {
        throw CLI::ValidationError("--min", opt.what + " requires min > 0");
    }
    if (!(opt.min >= 0.0)) throw CLI::ValidationError("--min", "grid needs min >= 0");

    std::ostringstream out;
    out << "x,value\n";
    out << std::setprecision(10);
    int overflow_rows = 0;
    for (int i = 0; i < opt.points; ++i) {
        const double x = opt.min + (opt.max - opt.min) * i / (opt.points - 1);
        out << std::defaultfloat << x << ',';
        try {
            double value = 0.0;
            if (opt.what == "pdf") {
                value = regmix::pdf(params, x);
            } else if (opt.what == "cdf") {
                value = regmix::cdf(params, x);
            } else {
                value = regmix::hazard(params, x);
            }
            out << value << '\n';
        } catch (const std::overflow_error&) {
            out << "NA\n";
            ++overflow_rows;
        }
    }
    emit(out.str(), opt.output);
    if (overflow_rows > 0) {
        std::cerr << "warning: " << overflow_rows
                  << " grid points beyond survival underflow were marked NA\n";
    }
    return kExitOk;
}

struct ReliabilityOptions {
    double alpha = 3.0;
    double theta = 0.05;
    int n = regmix::RegParams::kDefaultDepth;
    double t_max = 100.0;
    double step = 10.0;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    std::string topology = "parallel";
    std::string output;
};

int run_reliability(const ReliabilityOptions& opt) {
    const regmix::RegParams params(opt.alpha, opt.theta, opt.n);
    const regmix::Topology topology =
        (opt.topology == "series") ? regmix::Topology::series : regmix::Topology::parallel;
    const auto rows =
        regmix::reliability_table(params, opt.t_max, opt.step, topology, opt.trials,
                                  regmix::RngState(opt.seed, opt.stream));
    std::ostringstream out;
    regmix::write_reliability_csv(rows, out);
    emit(out.str(), opt.output);
    return kExitOk;
}

struct MomentsOptions {
    double alpha = 0.0;
    double theta = 0.0;
    int n = regmix::RegParams::kDefaultDepth;
    std::string format = "table";
    std::string output;
};

int run_moments(const MomentsOptions& opt) {
    const regmix::RegParams params(opt.alpha, opt.theta, opt.n);
    const regmix::MomentSummary s = regmix::moment_summary(params);
    nlohmann::ordered_json j;
    j["alpha"] = params.alpha();
    j["theta"] = params.theta();
    j["n"] = params.depth();
    j["weight"] = params.weight();
    j["mean"] = s.mean;
    j["variance"] = s.variance;
    j["cv"] = s.cv;
    j["skewness"] = s.skewness;
    j["kurtosis"] = s.kurtosis;
    const std::string text = (opt.format == "json") ? j.dump(2) + "\n" : key_value_table(j);
    emit(text, opt.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive exponential-gamma mixture lifetime model"};
    app.require_subcommand(1);

    FitOptions fit;
    auto* cmd_fit =
        app.add_subcommand("fit", "maximum-likelihood fits and the comparison report");
    cmd_fit->add_option("--data", fit.data, "builtin:<label> or a file with one value per line")
        ->required();
    cmd_fit->add_option("--model", fit.model, "all, reg, gl3, expgl, ngl or ql")
        ->check(CLI::IsMember({"all", "reg", "gl3", "expgl", "ngl", "ql"}));
    cmd_fit->add_option("--n", fit.n, "recursion depth")->check(CLI::PositiveNumber);
    cmd_fit->add_option("--format", fit.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd_fit->add_option("--output", fit.output, "write to file instead of stdout");

    SampleOptions sample;
    auto* cmd_sample = app.add_subcommand("sample", "draw random variates");
    cmd_sample->add_option("--alpha", sample.alpha, "shape")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--theta", sample.theta, "rate")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--n", sample.n, "recursion depth")->check(CLI::PositiveNumber);
    cmd_sample->add_option("--count", sample.count, "number of draws")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", sample.seed, "RNG seed");
    cmd_sample->add_option("--stream", sample.stream, "RNG stream");
    cmd_sample->add_option("--output", sample.output, "write to file instead of stdout");

    CurveOptions curve;
    auto* cmd_curve = app.add_subcommand("curve", "export pdf/cdf/hazard curves as CSV");
    cmd_curve->add_option("--what", curve.what, "pdf, cdf or hazard")
        ->required()
        ->check(CLI::IsMember({"pdf", "cdf", "hazard"}));
    cmd_curve->add_option("--alpha", curve.alpha, "shape")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_curve->add_option("--theta", curve.theta, "rate")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_curve->add_option("--n", curve.n, "recursion depth")->check(CLI::PositiveNumber);
    cmd_curve->add_option("--min", curve.min, "grid start")->required();
    cmd_curve->add_option("--max", curve.max, "grid end")->required();
    cmd_curve->add_option("--points", curve.points, "grid size")
        ->required()
        ->check(CLI::Range(2, 100000000));
    cmd_curve->add_option("--output", curve.output, "write to file instead of stdout");

    ReliabilityOptions rel;
    auto* cmd_rel = app.add_subcommand(
        "reliability", "two-component system reliability: exact vs Monte Carlo");
    cmd_rel->add_option("--alpha", rel.alpha, "shape")->check(CLI::PositiveNumber);
    cmd_rel->add_option("--theta", rel.theta, "rate")->check(CLI::PositiveNumber);
    cmd_rel->add_option("--n", rel.n, "recursion depth")->check(CLI::PositiveNumber);
    cmd_rel->add_option("--t-max", rel.t_max, "grid end")->check(CLI::PositiveNumber);
    cmd_rel->add_option("--step", rel.step, "grid step")->check(CLI::PositiveNumber);
    cmd_rel->add_option("--trials", rel.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    cmd_rel->add_option("--seed", rel.seed, "RNG seed");
    cmd_rel->add_option("--stream", rel.stream, "base RNG stream");
    cmd_rel->add_option("--topology", rel.topology, "parallel or series")
        ->check(CLI::IsMember({"parallel", "series"}));
    cmd_rel->add_option("--output", rel.output, "write to file instead of stdout");

    MomentsOptions moments;
    auto* cmd_moments =
        app.add_subcommand("moments", "mean, variance, cv, skewness, kurtosis");
    cmd_moments->add_option("--alpha", moments.alpha, "shape")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_moments->add_option("--theta", moments.theta, "rate")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_moments->add_option("--n", moments.n, "recursion depth")->check(CLI::PositiveNumber);
    cmd_moments->add_option("--format", moments.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd_moments->add_option("--output", moments.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (cmd_fit->parsed()) return run_fit(fit);
        if (cmd_sample->parsed()) return run_sample(sample);
        if (cmd_curve->parsed()) return run_curve(curve);
        if (cmd_rel->parsed()) return run_reliability(rel);
        if (cmd_moments->parsed()) return run_moments(moments);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const regmix::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const regmix::data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
