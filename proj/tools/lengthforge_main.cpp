#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <lengthforge/lengthforge.hpp>

namespace {

bool read_budget_from_env(lengthforge::Budget& budget, std::ostream& err) {
    const char* raw = std::getenv("LENGTHFORGE_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return true;
    }
    try {
        std::size_t consumed = 0;
        unsigned long long value = std::stoull(raw, &consumed);
        if (consumed != std::string(raw).size() || value == 0) {
            throw std::invalid_argument("not a positive integer");
        }
        budget.limit = static_cast<std::size_t>(value);
        return true;
    } catch (const std::exception&) {
        err << "error: LENGTHFORGE_BUDGET must be a positive integer\n";
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct numerical monoids realizing a prescribed set of factorization "
                 "lengths, and certify the result by exhaustive enumeration."};
    app.require_subcommand(1);

    lengthforge::RealizeRequest realize_request;
    auto* realize = app.add_subcommand(
        "realize", "Build a monoid and squarefree target with the given length profile");
    realize->add_option("--lengths", realize_request.lengths, "Lengths to realize (>= 2)")
        ->required()
        ->delimiter(',');
    realize->add_option("--counts", realize_request.counts,
                        "Factorization count per length (>= 1)")
        ->required()
        ->delimiter(',');
    realize->add_option("--json", realize_request.json_path,
                        "Write the realization trace JSON here (default: stdout)");
    realize->add_option("--gap", realize_request.gap_path, "Write a GAP-compatible export here");
    realize->add_flag("--no-verify", [&](std::int64_t) { realize_request.verify = false; },
                      "Skip the verification pass");
    realize->add_option("--max-level", realize_request.max_level, "Level ceiling (default 12)");

    lengthforge::AnalyzeRequest analyze_request;
    auto* analyze = app.add_subcommand(
        "analyze", "Factorizations, lengths, delta set and squarefree status of an element");
    analyze->add_option("--generators", analyze_request.generators,
                        "Generators of the numerical monoid (coprime, minimal)")
        ->required()
        ->delimiter(',');
    analyze->add_option("--element", analyze_request.element, "Element to analyze")->required();

    lengthforge::VerifyRequest verify_request;
    auto* verify = app.add_subcommand("verify", "Re-verify a persisted realization trace");
    verify->add_option("--input", verify_request.input_path, "Trace JSON to verify")->required();

    lengthforge::DeltaRequest delta_request;
    auto* delta = app.add_subcommand(
        "delta", "Realize a length set whose delta set is exactly the given distances");
    delta->add_option("--distances", delta_request.distances, "Distances to embed (>= 1)")
        ->required()
        ->delimiter(',');
    delta->add_option("--json", delta_request.json_path,
                      "Write the realization trace JSON here (default: stdout)");
    delta->add_option("--gap", delta_request.gap_path, "Write a GAP-compatible export here");
    delta->add_flag("--no-verify", [&](std::int64_t) { delta_request.verify = false; },
                    "Skip the verification pass");
    delta->add_option("--max-level", delta_request.max_level, "Level ceiling (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? lengthforge::kExitOk : lengthforge::kExitInvalidInput;
    }

    lengthforge::Budget budget;
    if (!read_budget_from_env(budget, std::cerr)) {
        return lengthforge::kExitInvalidInput;
    }

    if (realize->parsed()) {
        realize_request.budget = budget;
        return lengthforge::run_realize(realize_request, std::cout, std::cerr);
    }
    if (analyze->parsed()) {
        analyze_request.budget = budget;
        return lengthforge::run_analyze(analyze_request, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        verify_request.budget = budget;
        return lengthforge::run_verify(verify_request, std::cout, std::cerr);
    }
    delta_request.budget = budget;
    return lengthforge::run_delta(delta_request, std::cout, std::cerr);
}
