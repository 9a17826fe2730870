#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace lengthforge {

// Field order in every object is fixed; serialization is byte-stable across
// runs for identical inputs.
using OrderedJson = nlohmann::ordered_json;

inline OrderedJson trace_to_json(const RealizationTrace& trace) {
    OrderedJson j;
    j["lengths"] = trace.lengths;
    OrderedJson counts = OrderedJson::object();
    for (const auto& [length, count] : trace.counts) {
        counts[std::to_string(length)] = count;
    }
    j["counts"] = std::move(counts);
    OrderedJson steps = OrderedJson::array();
    for (const LevelStep& step : trace.steps) {
        OrderedJson s;
        s["k"] = step.k;
        s["prime"] = int_to_string(step.prime);
        OrderedJson coeffs = OrderedJson::array();
        for (const Int& c : step.coefficients.values) {
            coeffs.push_back(int_to_string(c));
        }
        s["coefficients"] = std::move(coeffs);
        OrderedJson atoms = OrderedJson::array();
        for (const Rat& atom : step.atoms) {
            atoms.push_back(rat_to_string(atom));
        }
        s["atoms"] = std::move(atoms);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    OrderedJson puiseux = OrderedJson::array();
    for (const Rat& g : trace.puiseux.generators) {
        puiseux.push_back(rat_to_string(g));
    }
    j["puiseux_generators"] = std::move(puiseux);
    j["scale"] = int_to_string(trace.scaling.scale);
    j["normalization_gcd"] = int_to_string(trace.scaling.normalization_gcd);
    OrderedJson numerical = OrderedJson::array();
    for (const Int& g : trace.scaling.monoid.generators) {
        numerical.push_back(int_to_string(g));
    }
    j["numerical_generators"] = std::move(numerical);
    j["target"] = int_to_string(trace.target);
    return j;
}

namespace detail {

inline const OrderedJson& require_field(const OrderedJson& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("trace JSON: missing field '") + name + "'");
    }
    return *it;
}

inline std::vector<std::string> string_list(const OrderedJson& j, const char* name) {
    const OrderedJson& field = require_field(j, name);
    if (!field.is_array()) {
        throw std::invalid_argument(std::string("trace JSON: '") + name + "' must be an array");
    }
    std::vector<std::string> out;
    for (const auto& item : field) {
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace detail

inline RealizationTrace trace_from_json(const OrderedJson& j) {
    RealizationTrace trace;
    trace.lengths = detail::require_field(j, "lengths").get<std::vector<std::uint32_t>>();
    for (const auto& [key, value] : detail::require_field(j, "counts").items()) {
        trace.counts[static_cast<std::uint32_t>(int_from_string(key))] =
            value.get<std::uint32_t>();
    }
    for (const auto& s : detail::require_field(j, "steps")) {
        LevelStep step;
        step.k = detail::require_field(s, "k").get<unsigned>();
        step.prime = int_from_string(detail::require_field(s, "prime").get<std::string>());
        step.coefficients.k = step.k;
        for (const std::string& c : detail::string_list(s, "coefficients")) {
            step.coefficients.values.push_back(int_from_string(c));
        }
        for (const std::string& a : detail::string_list(s, "atoms")) {
            step.atoms.push_back(rat_from_string(a));
        }
        trace.steps.push_back(std::move(step));
    }
    std::vector<Rat> puiseux;
    for (const std::string& g : detail::string_list(j, "puiseux_generators")) {
        puiseux.push_back(rat_from_string(g));
    }
    trace.puiseux = make_puiseux(std::move(puiseux));
    std::vector<Int> numerical;
    for (const std::string& g : detail::string_list(j, "numerical_generators")) {
        numerical.push_back(int_from_string(g));
    }
    trace.scaling.monoid = make_numerical(std::move(numerical));
    trace.scaling.scale = int_from_string(detail::require_field(j, "scale").get<std::string>());
    trace.scaling.normalization_gcd =
        int_from_string(detail::require_field(j, "normalization_gcd").get<std::string>());
    trace.target = int_from_string(detail::require_field(j, "target").get<std::string>());
    return trace;
}

inline OrderedJson factorization_set_to_json(const FactorizationSet& z) {
    OrderedJson j;
    j["target"] = rat_to_string(z.target);
    j["vectors"] = z.vectors;
    return j;
}

inline OrderedJson report_to_json(const VerificationReport& report) {
    OrderedJson j;
    j["lengths_ok"] = report.lengths_ok;
    j["counts_ok"] = report.counts_ok;
    j["squarefree"] = report.squarefree;
    j["squarefree_strong"] = report.squarefree_strong;
    j["atoms_ok"] = report.atoms_ok;
    j["step_bijection_ok"] = report.step_bijection_ok;
    j["scaling_consistency_ok"] = report.scaling_consistency_ok;
    j["overall"] = report.overall();
    j["details"] = report.details;
    return j;
}

// Drop-in input for the GAP numericalsgps package.
inline std::string gap_export(const RealizationTrace& trace) {
    std::ostringstream out;
    out << "# target := " << int_to_string(trace.target) << "\n";
    out << "# lengths := [ ";
    for (std::size_t i = 0; i < trace.lengths.size(); ++i) {
        out << (i ? ", " : "") << trace.lengths[i];
    }
    out << " ]\n";
    out << "# counts := [ ";
    std::size_t i = 0;
    for (const auto& [length, count] : trace.counts) {
        out << (i++ ? ", " : "") << count;
    }
    out << " ]\n";
    out << "NumericalSemigroup(";
    for (std::size_t g = 0; g < trace.scaling.monoid.generators.size(); ++g) {
        out << (g ? "," : "") << int_to_string(trace.scaling.monoid.generators[g]);
    }
    out << ");\n";
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    file << contents;
    if (!file) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace lengthforge
