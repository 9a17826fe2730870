#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace lengthforge {

// Exit-code contract, fixed for scripting: 0 verified success,
// 1 verification failure, 2 invalid input (including budget overruns).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

struct RealizeRequest {
    std::vector<std::int64_t> lengths;
    std::vector<std::int64_t> counts;
    std::string json_path;
    std::string gap_path;
    bool verify = true;
    unsigned max_level = 12;
    Budget budget;
};

struct AnalyzeRequest {
    std::vector<std::string> generators;
    std::string element;
    Budget budget;
};

struct VerifyRequest {
    std::string input_path;
    Budget budget;
};

struct DeltaRequest {
    std::vector<std::int64_t> distances;
    std::string json_path;
    std::string gap_path;
    bool verify = true;
    unsigned max_level = 12;
    Budget budget;
};

namespace detail {

inline std::map<std::uint32_t, std::uint32_t> length_count_map(
    const std::vector<std::int64_t>& lengths, const std::vector<std::int64_t>& counts) {
    if (lengths.empty() || lengths.size() != counts.size()) {
        throw std::invalid_argument("lengths and counts must be nonempty lists of equal size");
    }
    std::map<std::uint32_t, std::uint32_t> map;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] < 2) {
            throw std::invalid_argument("lengths must be >= 2");
        }
        if (counts[i] < 1) {
            throw std::invalid_argument("counts must be >= 1");
        }
        if (!map.emplace(static_cast<std::uint32_t>(lengths[i]),
                         static_cast<std::uint32_t>(counts[i]))
                 .second) {
            throw std::invalid_argument("duplicate length " + std::to_string(lengths[i]));
        }
    }
    return map;
}

inline int emit_trace(const RealizationTrace& trace, const std::string& json_path,
                      const std::string& gap_path, bool verify, const Budget& budget,
                      std::ostream& out, std::ostream& err) {
    std::string text = trace_to_json(trace).dump() + "\n";
    if (json_path.empty()) {
        out << text;
    } else {
        write_text_file(json_path, text);
    }
    if (!gap_path.empty()) {
        write_text_file(gap_path, gap_export(trace));
    }
    if (!verify) {
        return kExitOk;
    }
    VerificationReport report = verify_realization(trace, budget);
    if (!report.overall()) {
        err << "verification failed: " << detail::join(report.failing_checks()) << "\n";
        for (const std::string& d : report.details) {
            err << "  " << d << "\n";
        }
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace detail

inline int run_realize(const RealizeRequest& request, std::ostream& out, std::ostream& err) {
    try {
        auto map = detail::length_count_map(request.lengths, request.counts);
        RealizationTrace trace = realize(map, RealizeOptions{request.max_level});
        return detail::emit_trace(trace, request.json_path, request.gap_path, request.verify,
                                  request.budget, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

inline int run_analyze(const AnalyzeRequest& request, std::ostream& out, std::ostream& err) {
    try {
        if (request.generators.empty()) {
            throw std::invalid_argument("at least one generator required");
        }
        std::vector<Int> generators;
        for (const std::string& g : request.generators) {
            generators.push_back(int_from_string(g));
        }
        NumericalMonoid monoid = make_numerical(std::move(generators));
        Int element = int_from_string(request.element);
        if (element < 0) {
            throw std::invalid_argument("element must be nonnegative");
        }
        FactorizationSet z = factorizations(monoid, element, request.budget);
        LengthProfile profile = length_profile(z);
        DeltaSet delta = delta_set(profile.lengths);

        OrderedJson j;
        OrderedJson gens = OrderedJson::array();
        for (const Int& g : monoid.generators) {
            gens.push_back(int_to_string(g));
        }
        j["numerical_generators"] = std::move(gens);
        j["element"] = int_to_string(element);
        j["factorizations"] = factorization_set_to_json(z);
        j["lengths"] = profile.lengths;
        OrderedJson counts = OrderedJson::object();
        for (const auto& [length, count] : profile.counts) {
            counts[std::to_string(length)] = count;
        }
        j["counts"] = std::move(counts);
        j["delta"] = delta.distances;
        j["squarefree"] =
            squarefree_q(monoid, element, SquarefreeMode::standard, request.budget);
        j["squarefree_strong"] =
            squarefree_q(monoid, element, SquarefreeMode::strong, request.budget);
        out << j.dump() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

inline int run_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
    RealizationTrace trace;
    try {
        OrderedJson j = OrderedJson::parse(read_text_file(request.input_path));
        trace = trace_from_json(j);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    VerificationReport report = verify_realization(trace, request.budget);
    out << report_to_json(report).dump() << "\n";
    if (!report.overall()) {
        err << "verification failed: " << detail::join(report.failing_checks()) << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

inline int run_delta(const DeltaRequest& request, std::ostream& out, std::ostream& err) {
    try {
        if (request.distances.empty()) {
            throw std::invalid_argument("at least one distance required");
        }
        std::vector<std::uint32_t> distances;
        for (std::int64_t d : request.distances) {
            if (d < 1) {
                throw std::invalid_argument("distances must be positive");
            }
            distances.push_back(static_cast<std::uint32_t>(d));
        }
        RealizationTrace trace = realize_delta_superset(distances, RealizeOptions{request.max_level});

        // The trace's length set must reproduce the requested distances exactly.
        std::sort(distances.begin(), distances.end());
        distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
        if (delta_set(trace.lengths).distances != distances) {
            err << "verification failed: delta set of the realized lengths differs\n";
            return kExitVerificationFailed;
        }
        return detail::emit_trace(trace, request.json_path, request.gap_path, request.verify,
                                  request.budget, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

}  // namespace lengthforge
