#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace lengthforge {

// The level-k integer coefficients: c_i = k^(i-1) for i < k and
// c_k = -(k^(k-1) - 1)/(k - 1), so the vector sums to zero. For any prime
// p > (k+1)*k^(k-1), every vector (l_1..l_k) of nonnegative integers with
// sum(l_i * c_i) divisible by p is all-zero, all-one, or longer than k.
struct CoefficientVector {
    unsigned k = 0;
    std::vector<Int> values;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

// One recursion level: k atoms (p+c_i)/(kp) for a qualifying prime p. Atoms
// are kept in formula order i = 1..k.
struct LevelStep {
    unsigned k = 0;
    Int prime;
    CoefficientVector coefficients;
    std::vector<Rat> atoms;
};

// Full record of a realization: the requested length profile, the recursion
// steps, the Puiseux monoid they generate, and its numerical-monoid image.
// The target element is the image of 1.
struct RealizationTrace {
    std::vector<std::uint32_t> lengths;
    std::map<std::uint32_t, std::uint32_t> counts;
    std::vector<LevelStep> steps;
    PuiseuxMonoid puiseux;
    ScalingResult scaling;
    Int target;
};

struct RealizeOptions {
    // Levels above this are rejected: the prime bound (k+1)*k^(k-1) passes
    // 1e13 at k = 13 and the scaled generators explode. Raise deliberately.
    unsigned max_level = 12;
};

// (k+1) * k^(k-1), the strict lower bound every level-k prime must exceed.
inline Int level_prime_bound(unsigned k) {
    return (Int(k) + 1) * boost::multiprecision::pow(Int(k), k - 1);
}

inline CoefficientVector coefficients(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("coefficients: level must be >= 2");
    }
    std::vector<Int> values;
    values.reserve(k);
    Int power = 1;
    Int sum = 0;
    for (unsigned i = 1; i < k; ++i) {
        values.push_back(power);
        sum += power;
        power *= k;
    }
    values.push_back(-sum);
    return CoefficientVector{k, std::move(values)};
}

// The level-k atoms (p + c_i)/(kp), pairwise distinct, each in
// (1/(k+1), 1), summing to 1 exactly.
inline std::vector<Rat> level_atoms(unsigned k, const Int& p) {
    if (k < 2) {
        throw std::invalid_argument("level_atoms: level must be >= 2");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("level_atoms: " + int_to_string(p) + " is not prime");
    }
    if (p <= level_prime_bound(k)) {
        throw std::invalid_argument("level_atoms: prime " + int_to_string(p) +
                                    " does not exceed (k+1)*k^(k-1)");
    }
    CoefficientVector c = coefficients(k);
    Int kp = Int(k) * p;
    std::vector<Rat> atoms;
    atoms.reserve(k);
    for (const Int& ci : c.values) {
        atoms.push_back(make_rational(p + ci, kp));
    }
    return atoms;
}

// Base case: the monoid generated by the level-k atoms for the smallest
// admissible prime. Its only factorization of 1 is the sum of all k atoms.
inline std::pair<LevelStep, PuiseuxMonoid> base_monoid(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("base_monoid: level must be >= 2");
    }
    Int p = next_qualifying_prime(level_prime_bound(k), 1);
    std::vector<Rat> atoms = level_atoms(k, p);
    LevelStep step{k, std::move(p), coefficients(k), atoms};
    return {std::move(step), make_puiseux(std::move(atoms))};
}

// Extension step: adjoins the level-k atoms for the smallest admissible prime
// not dividing any existing denominator. The new atoms have p in their
// denominators while no old generator does, so the union is disjoint and the
// factorizations of 1 grow by exactly the one new length-k vector.
inline std::pair<LevelStep, PuiseuxMonoid> extend(const PuiseuxMonoid& h, unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("extend: level must be >= 2");
    }
    Int p = next_qualifying_prime(level_prime_bound(k), denominator_lcm(h));
    std::vector<Rat> atoms = level_atoms(k, p);
    std::vector<Rat> merged = h.generators;
    merged.insert(merged.end(), atoms.begin(), atoms.end());
    PuiseuxMonoid extended = make_puiseux(std::move(merged));
    if (extended.generators.size() != h.generators.size() + k) {
        throw std::logic_error("extend: new atoms collide with existing generators");
    }
    LevelStep step{k, std::move(p), coefficients(k), std::move(atoms)};
    return {std::move(step), std::move(extended)};
}

// Realizes the requested set of lengths with the requested number of
// factorizations per length: one level step per requested factorization,
// levels ascending, then the scaling isomorphism onto a numerical monoid.
// The conclusion (length profile, counts, squarefreeness) is certified
// separately by verify_realization, never assumed.
inline RealizationTrace realize(const std::map<std::uint32_t, std::uint32_t>& length_counts,
                                const RealizeOptions& options = {}) {
    if (length_counts.empty()) {
        throw std::invalid_argument("realize: the requested length set is empty");
    }
    std::vector<unsigned> levels;
    for (const auto& [length, count] : length_counts) {
        if (length < 2) {
            throw std::invalid_argument("realize: lengths must be >= 2");
        }
        if (count < 1) {
            throw std::invalid_argument("realize: counts must be >= 1");
        }
        if (length > options.max_level) {
            throw std::invalid_argument(
                "realize: length " + std::to_string(length) +
                " exceeds the level ceiling (" + std::to_string(options.max_level) +
                "); raise max_level to override");
        }
        for (std::uint32_t i = 0; i < count; ++i) {
            levels.push_back(length);
        }
    }

    RealizationTrace trace;
    for (const auto& [length, count] : length_counts) {
        trace.lengths.push_back(length);
    }
    trace.counts = length_counts;

    auto [base_step, monoid] = base_monoid(levels.front());
    trace.steps.push_back(std::move(base_step));
    PuiseuxMonoid current = std::move(monoid);
    for (std::size_t i = 1; i < levels.size(); ++i) {
        auto [step, extended] = extend(current, levels[i]);
        trace.steps.push_back(std::move(step));
        current = std::move(extended);
    }

    trace.puiseux = std::move(current);
    trace.scaling = scale_to_numerical(trace.puiseux);
    trace.target = trace.scaling.scale / trace.scaling.normalization_gcd;
    return trace;
}

// Realizes a length set whose delta set is exactly the given distances:
// L = {2, 2+d_1, 2+d_1+d_2, ...} over the distances sorted ascending, with
// one factorization per length.
inline RealizationTrace realize_delta_superset(std::vector<std::uint32_t> distances,
                                               const RealizeOptions& options = {}) {
    if (distances.empty()) {
        throw std::invalid_argument("realize_delta_superset: distance set is empty");
    }
    for (std::uint32_t d : distances) {
        if (d < 1) {
            throw std::invalid_argument("realize_delta_superset: distances must be positive");
        }
    }
    std::sort(distances.begin(), distances.end());
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());

    std::map<std::uint32_t, std::uint32_t> length_counts;
    std::uint32_t running = 2;
    length_counts[running] = 1;
    for (std::uint32_t d : distances) {
        running += d;
        length_counts[running] = 1;
    }
    return realize(length_counts, options);
}

}  // namespace lengthforge
