#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "construct.hpp"

namespace lengthforge {

// Outcome of the end-to-end certificate. `overall` requires every check
// except the strong squarefree variant, which is reported for information.
struct VerificationReport {
    bool lengths_ok = false;
    bool counts_ok = false;
    bool squarefree = false;
    bool squarefree_strong = false;
    bool atoms_ok = false;
    bool step_bijection_ok = false;
    bool scaling_consistency_ok = false;
    std::vector<std::string> details;

    bool overall() const {
        return lengths_ok && counts_ok && squarefree && atoms_ok && step_bijection_ok &&
               scaling_consistency_ok;
    }

    std::vector<std::string> failing_checks() const {
        std::vector<std::string> failing;
        if (!lengths_ok) failing.push_back("lengths");
        if (!counts_ok) failing.push_back("counts");
        if (!squarefree) failing.push_back("squarefree");
        if (!atoms_ok) failing.push_back("atoms");
        if (!step_bijection_ok) failing.push_back("step_bijection");
        if (!scaling_consistency_ok) failing.push_back("scaling_consistency");
        return failing;
    }
};

// Brute-force check of the coefficient property: every vector (l_1..l_k) with
// l_1+...+l_k <= k and sum(l_i*c_i) divisible by p must be all-zero or
// all-one. Vectors with sum > k satisfy the property by its own statement, so
// the bounded enumeration is complete. Returns false when p is too small for
// the property to hold (for example p below (k+1)*k^(k-1)).
inline bool trichotomy_check(unsigned k, const CoefficientVector& c, const Int& p) {
    if (k < 2 || c.k != k || c.values.size() != k) {
        throw std::invalid_argument("trichotomy_check: malformed coefficient vector");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("trichotomy_check: modulus must be prime");
    }
    std::vector<unsigned> l(k, 0);
    auto scan = [&](auto&& self, std::size_t i, unsigned used) -> bool {
        if (i == k) {
            Int weighted = 0;
            for (std::size_t j = 0; j < k; ++j) {
                weighted += Int(l[j]) * c.values[j];
            }
            if (weighted % p != 0) {
                return true;
            }
            bool all_zero = std::all_of(l.begin(), l.end(), [](unsigned v) { return v == 0; });
            bool all_one = std::all_of(l.begin(), l.end(), [](unsigned v) { return v == 1; });
            return all_zero || all_one;
        }
        for (unsigned e = 0; e + used <= k; ++e) {
            l[i] = e;
            if (!self(self, i + 1, used + e)) {
                return false;
            }
        }
        l[i] = 0;
        return true;
    };
    return scan(scan, 0, 0);
}

// Independent factorization oracle: plain nested loops over per-generator
// exponent ranges, recomputing every dot product from scratch. Shares no code
// with the engine's pruned descent.
inline FactorizationSet oracle_factorizations(const NumericalMonoid& m, const Int& a) {
    if (a < 0) {
        throw std::invalid_argument("oracle_factorizations: element must be nonnegative");
    }
    constexpr std::uint64_t kMaxIterations = 1'000'000'000;
    if (a > std::numeric_limits<std::uint64_t>::max() / 2 ||
        m.generators.back() > std::numeric_limits<std::uint64_t>::max() / 2) {
        throw BudgetError("oracle_factorizations: operands too large for the oracle");
    }
    auto target = static_cast<std::uint64_t>(a);
    std::vector<std::uint64_t> gens;
    gens.reserve(m.generators.size());
    for (const Int& g : m.generators) {
        gens.push_back(static_cast<std::uint64_t>(g));
    }
    std::vector<std::uint64_t> range(gens.size());
    std::uint64_t combinations = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        range[i] = target / gens[i];
        if (combinations > kMaxIterations / (range[i] + 1)) {
            throw BudgetError("oracle_factorizations: iteration count exceeds the oracle scale");
        }
        combinations *= range[i] + 1;
    }

    std::vector<ExponentVector> out;
    std::vector<std::uint64_t> e(gens.size(), 0);
    for (std::uint64_t iter = 0; iter < combinations; ++iter) {
        std::uint64_t dot = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            dot += e[i] * gens[i];
        }
        if (dot == target) {
            ExponentVector v(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) {
                v[i] = static_cast<std::uint32_t>(e[i]);
            }
            out.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (e[i] < range[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return FactorizationSet{Rat(a), std::move(out)};
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
    std::string text;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            text += ", ";
        }
        text += parts[i];
    }
    return text;
}

}  // namespace detail

// Recomputes everything a RealizationTrace claims and reports each check
// separately. Budget overruns are recorded as failures with diagnostics,
// never as silent passes.
inline VerificationReport verify_realization(const RealizationTrace& trace,
                                             const Budget& budget = {}) {
    VerificationReport report;
    auto note = [&](std::string text) { report.details.push_back(std::move(text)); };

    if (trace.steps.empty() || trace.puiseux.generators.empty()) {
        note("trace has no steps or no generators");
        return report;
    }

    // Step consistency: each step's coefficients and atoms must follow from
    // (k, prime), the prime must qualify against everything built before it,
    // and the recorded monoid must be exactly the union of the step atoms.
    bool steps_ok = true;
    unsigned max_level = 0;
    Int prior_denominator_lcm = 1;
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const LevelStep& step = trace.steps[s];
        const std::string label = "step " + std::to_string(s + 1);
        try {
            if (step.k < 2) {
                steps_ok = false;
                note(label + ": level below 2");
                continue;
            }
            max_level = std::max(max_level, step.k);
            if (step.coefficients != coefficients(step.k)) {
                steps_ok = false;
                note(label + ": coefficient vector does not match its level");
            }
            if (!is_prime(step.prime) || step.prime <= level_prime_bound(step.k)) {
                steps_ok = false;
                note(label + ": prime " + int_to_string(step.prime) + " is not admissible");
            } else if (prior_denominator_lcm % step.prime == 0) {
                steps_ok = false;
                note(label + ": prime divides an earlier atom denominator");
            } else if (step.atoms != level_atoms(step.k, step.prime)) {
                steps_ok = false;
                note(label + ": atoms do not match (prime + c_i)/(k*prime)");
            }
        } catch (const std::exception& e) {
            steps_ok = false;
            note(label + ": " + e.what());
        }
        for (const Rat& atom : step.atoms) {
            prior_denominator_lcm =
                boost::multiprecision::lcm(prior_denominator_lcm, Int(denominator(atom)));
        }
    }

    std::vector<Rat> atom_union;
    for (const LevelStep& step : trace.steps) {
        atom_union.insert(atom_union.end(), step.atoms.begin(), step.atoms.end());
    }
    std::sort(atom_union.begin(), atom_union.end());
    if (atom_union != trace.puiseux.generators) {
        steps_ok = false;
        note("monoid generators are not the disjoint union of the step atoms");
    }

    // Rational-level enumeration of the factorizations of 1. Every atom at
    // level k exceeds 1/(k+1), so the largest level bounds all lengths.
    FactorizationSet z_one;
    bool enumeration_ok = false;
    try {
        z_one = factorizations_of_one(trace.puiseux, std::max(max_level, 2u), budget);
        enumeration_ok = true;
    } catch (const std::exception& e) {
        note(std::string("rational enumeration failed: ") + e.what());
    }

    if (enumeration_ok) {
        LengthProfile profile = length_profile(z_one);
        report.lengths_ok = profile.lengths == trace.lengths;
        if (!report.lengths_ok) {
            note("computed length set differs from the requested one");
        }
        report.counts_ok = profile.lengths == trace.lengths &&
                           std::all_of(trace.counts.begin(), trace.counts.end(),
                                       [&](const auto& kv) {
                                           auto it = profile.counts.find(kv.first);
                                           return it != profile.counts.end() &&
                                                  it->second == kv.second;
                                       }) &&
                           profile.counts.size() == trace.counts.size();
        if (!report.counts_ok) {
            note("per-length factorization counts differ from the requested ones");
        }

        // Bijection: the factorizations of 1 must be exactly the indicator
        // vectors of the steps' atom sets.
        bool bijection = steps_ok;
        std::vector<ExponentVector> indicators;
        for (const LevelStep& step : trace.steps) {
            ExponentVector indicator(trace.puiseux.generators.size(), 0);
            for (const Rat& atom : step.atoms) {
                auto pos = std::lower_bound(trace.puiseux.generators.begin(),
                                            trace.puiseux.generators.end(), atom);
                if (pos == trace.puiseux.generators.end() || *pos != atom) {
                    bijection = false;
                    break;
                }
                indicator[static_cast<std::size_t>(
                    pos - trace.puiseux.generators.begin())] = 1;
            }
            indicators.push_back(std::move(indicator));
        }
        std::sort(indicators.begin(), indicators.end());
        if (bijection && indicators != z_one.vectors) {
            bijection = false;
            note("factorizations of 1 are not the step indicator vectors");
        }
        report.step_bijection_ok = bijection;
    }

    try {
        report.atoms_ok = atoms_of(trace.puiseux, budget) == trace.puiseux.generators;
        if (!report.atoms_ok) {
            note("some generator decomposes over the others");
        }
    } catch (const std::exception& e) {
        note(std::string("atom check failed: ") + e.what());
    }

    // Scaling: recompute the numerical monoid and re-enumerate the target at
    // the integer level; the exponent vectors must match the rational level
    // one for one.
    try {
        ScalingResult scaling = scale_to_numerical(trace.puiseux);
        Int target = scaling.scale / scaling.normalization_gcd;
        bool recorded_matches = scaling.monoid == trace.scaling.monoid &&
                                scaling.scale == trace.scaling.scale &&
                                scaling.normalization_gcd == trace.scaling.normalization_gcd &&
                                target == trace.target;
        if (!recorded_matches) {
            note("recorded scaling data differs from the recomputed scaling");
        }
        bool integer_matches = false;
        if (enumeration_ok) {
            FactorizationSet z_int = factorizations(scaling.monoid, target, budget);
            integer_matches = z_int.vectors == z_one.vectors;
            if (!integer_matches) {
                note("integer-level factorizations differ from the rational level");
            }
        }
        report.scaling_consistency_ok = recorded_matches && integer_matches;

        report.squarefree = squarefree_q(scaling.monoid, target, SquarefreeMode::standard, budget);
        if (!report.squarefree) {
            note("target decomposes as 2b + c with b, c nonzero");
        }
        report.squarefree_strong =
            squarefree_q(scaling.monoid, target, SquarefreeMode::strong, budget);
    } catch (const std::exception& e) {
        note(std::string("scaling check failed: ") + e.what());
    }

    if (report.overall()) {
        note("all checks passed (" + std::to_string(z_one.vectors.size()) +
             " factorizations certified)");
    }
    return report;
}

}  // namespace lengthforge
