// povmbound command line tool: check entropic bounds on instances loaded from
// JSON files, reproduce the built-in discrimination example, or sweep random
// instances. Exit codes: 0 ok, 1 input/usage error, 2 bound violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "povmbound/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

struct CheckOptions {
    std::string path;
    bool json = false;
    double tolerance = povmbound::tol::completeness;
};

struct ExampleOptions {
    std::vector<double> pair;
    bool json = false;
};

struct FuzzOptions {
    std::uint64_t seed = 0;
    long trials = 0;
    std::string dims;
    std::string outcomes = "2..5";
    bool rank_one = false;
    int jobs = 1;
    bool json = false;
};

// Parses "LO..HI" or a single "N" as N..N.
bool parse_range(const std::string& text, Eigen::Index& lo, Eigen::Index& hi) {
    try {
        const std::size_t sep = text.find("..");
        if (sep == std::string::npos) {
            lo = hi = static_cast<Eigen::Index>(std::stol(text));
            return true;
        }
        lo = static_cast<Eigen::Index>(std::stol(text.substr(0, sep)));
        hi = static_cast<Eigen::Index>(std::stol(text.substr(sep + 2)));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int run_check(const CheckOptions& options) {
    povmbound::CheckedInstance checked = [&options] {
        const povmbound::Instance instance = povmbound::load_instance(options.path);
        return povmbound::validate_instance(instance, options.tolerance);
    }();

    povmbound::BoundReport report = povmbound::check_instance(
        checked.m, checked.n, checked.rho, checked.pair, checked.orders);
    report.first.label = checked.m_name;
    if (report.second) {
        report.second->label = checked.n_name;
    }

    if (options.json) {
        std::cout << povmbound::render_report_json(report) << "\n";
    } else {
        std::cout << povmbound::render_report_text(report);
    }
    return report.has_violation() ? kExitViolation : kExitOk;
}

int run_example(const ExampleOptions& options) {
    povmbound::ConjugatePair pair = povmbound::ConjugatePair::of(povmbound::RenyiOrder::of(2.0));
    if (options.pair.size() == 1) {
        pair = povmbound::ConjugatePair::of(povmbound::RenyiOrder::of(options.pair[0]));
    } else if (options.pair.size() == 2) {
        pair = povmbound::ConjugatePair::of(povmbound::RenyiOrder::of(options.pair[0]),
                                            povmbound::RenyiOrder::of(options.pair[1]));
    }
    const povmbound::ExampleReport example = povmbound::reference_example_report(pair);
    if (options.json) {
        std::cout << povmbound::render_example_json(example) << "\n";
    } else {
        std::cout << povmbound::render_example_text(example);
    }
    return example.all_pass ? kExitOk : kExitViolation;
}

int run_fuzz(const FuzzOptions& options) {
    povmbound::FuzzConfig config;
    config.seed = options.seed;
    config.trials = options.trials;
    config.rank_one_only = options.rank_one;
    config.jobs = options.jobs;
    if (!parse_range(options.dims, config.dim_lo, config.dim_hi)) {
        throw povmbound::ValidationError("fuzz: --dims expects LO..HI");
    }
    if (!parse_range(options.outcomes, config.outcomes_lo, config.outcomes_hi)) {
        throw povmbound::ValidationError("fuzz: --outcomes expects LO..HI");
    }

    const povmbound::FuzzSummary summary = povmbound::run_fuzz(config);
    if (options.json) {
        std::cout << povmbound::render_fuzz_json(summary, config) << "\n";
    } else {
        std::cout << povmbound::render_fuzz_text(summary, config);
    }
    return summary.violations.total() > 0 ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic uncertainty bounds for generalized quantum measurements"};
    app.require_subcommand(1);

    CheckOptions check_options;
    CLI::App* check = app.add_subcommand(
        "check", "Check all applicable bounds on an instance file");
    check->add_option("file", check_options.path, "Instance JSON file")->required();
    check->add_flag("--json", check_options.json, "Machine-readable output");
    check->add_option("--tol", check_options.tolerance,
                      "Completeness tolerance for measurement validation");

    ExampleOptions example_options;
    CLI::App* example = app.add_subcommand(
        "paper-example", "Reproduce the two-state discrimination example and "
                         "verify every number against its closed form");
    example->add_option("--pair", example_options.pair,
                        "Conjugate orders: alpha [beta]; beta derived when omitted")
        ->expected(1, 2);
    example->add_flag("--json", example_options.json, "Machine-readable output");

    FuzzOptions fuzz_options;
    CLI::App* fuzz = app.add_subcommand(
        "fuzz", "Verify the bounds on randomly sampled instances");
    fuzz->add_option("--seed", fuzz_options.seed, "Master seed")->required();
    fuzz->add_option("--trials", fuzz_options.trials, "Number of instances")->required();
    fuzz->add_option("--dims", fuzz_options.dims, "Dimension range LO..HI")->required();
    fuzz->add_option("--outcomes", fuzz_options.outcomes, "Outcome-count range LO..HI");
    fuzz->add_flag("--rank-one", fuzz_options.rank_one,
                   "Sample rank-one measurements only and assert overlap/norm saturation");
    fuzz->add_option("--jobs", fuzz_options.jobs, "Worker threads (partition is deterministic)");
    fuzz->add_flag("--json", fuzz_options.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*check) {
            return run_check(check_options);
        }
        if (*example) {
            return run_example(example_options);
        }
        return run_fuzz(fuzz_options);
    } catch (const povmbound::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
}
