#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace lengthforge {

// Finitely generated additive submonoid of the nonnegative rationals with
// every generator strictly between 0 and 1. Generators are stored in lowest
// terms, strictly ascending, duplicate-free; exponent vectors throughout the
// library index generators in this order.
struct PuiseuxMonoid {
    std::vector<Rat> generators;

    friend bool operator==(const PuiseuxMonoid&, const PuiseuxMonoid&) = default;
};

// Additive submonoid of N0 with finite complement: positive generators with
// gcd 1, stored strictly ascending, none representable over the others (the
// generator list is the atom set).
struct NumericalMonoid {
    std::vector<Int> generators;

    friend bool operator==(const NumericalMonoid&, const NumericalMonoid&) = default;
};

// Result of the order-preserving isomorphism onto a numerical monoid:
// g  ->  (scale * g) / normalization_gcd.
struct ScalingResult {
    NumericalMonoid monoid;
    Int scale;              // lcm of the rational generators' denominators
    Int normalization_gcd;  // common factor removed from the integerized list
};

namespace detail {

// Existence check: is x a nonnegative integer combination of gens[0..i]?
// Memoized recursion over the generator index; gens must be ascending.
struct KnapsackSearch {
    const std::vector<Int>& gens;
    std::map<std::pair<std::size_t, Int>, bool> memo;
    std::size_t nodes = 0;
    std::size_t node_cap;

    bool run(std::size_t i, const Int& r) {
        if (r == 0) {
            return true;
        }
        if (++nodes > node_cap) {
            throw BudgetError("membership search exceeded its node budget");
        }
        if (i == 0) {
            return r % gens[0] == 0;
        }
        auto key = std::make_pair(i, r);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        bool found = false;
        for (Int e = r / gens[i]; e >= 0 && !found; --e) {
            found = run(i - 1, r - e * gens[i]);
        }
        memo.emplace(key, found);
        return found;
    }
};

inline bool representable(const std::vector<Int>& gens, const Int& x,
                          std::size_t node_cap = 4'000'000) {
    if (x == 0) {
        return true;
    }
    if (gens.empty() || x < 0) {
        return false;
    }
    KnapsackSearch search{.gens = gens, .node_cap = node_cap};
    return search.run(gens.size() - 1, x);
}

}  // namespace detail

// Canonicalizes a generator list: lowest terms (automatic), ascending,
// duplicate-free. Idempotent.
inline PuiseuxMonoid make_puiseux(std::vector<Rat> raw_generators) {
    if (raw_generators.empty()) {
        throw std::invalid_argument("make_puiseux: at least one generator required");
    }
    for (const Rat& g : raw_generators) {
        if (g <= 0 || g >= 1) {
            throw std::invalid_argument("make_puiseux: generator " + rat_to_string(g) +
                                        " lies outside (0, 1)");
        }
    }
    std::sort(raw_generators.begin(), raw_generators.end());
    raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                         raw_generators.end());
    return PuiseuxMonoid{std::move(raw_generators)};
}

inline Int denominator_lcm(const PuiseuxMonoid& h) {
    Int result = 1;
    for (const Rat& g : h.generators) {
        result = boost::multiprecision::lcm(result, Int(denominator(g)));
    }
    return result;
}

// Validates the numerical-monoid invariants: positive, ascending, coprime,
// and minimal (no generator is a combination of the others).
inline NumericalMonoid make_numerical(std::vector<Int> raw_generators) {
    if (raw_generators.empty()) {
        throw std::invalid_argument("make_numerical: at least one generator required");
    }
    for (const Int& g : raw_generators) {
        if (g < 1) {
            throw std::invalid_argument("make_numerical: generators must be positive");
        }
    }
    std::sort(raw_generators.begin(), raw_generators.end());
    raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                         raw_generators.end());
    Int overall_gcd = 0;
    for (const Int& g : raw_generators) {
        overall_gcd = boost::multiprecision::gcd(overall_gcd, g);
    }
    if (overall_gcd != 1) {
        throw std::invalid_argument("make_numerical: generators are not coprime (gcd " +
                                    int_to_string(overall_gcd) + ")");
    }
    for (std::size_t j = 0; j < raw_generators.size(); ++j) {
        std::vector<Int> others;
        others.reserve(raw_generators.size() - 1);
        for (std::size_t i = 0; i < raw_generators.size(); ++i) {
            if (i != j) {
                others.push_back(raw_generators[i]);
            }
        }
        if (detail::representable(others, raw_generators[j])) {
            throw std::invalid_argument("make_numerical: generator " +
                                        int_to_string(raw_generators[j]) +
                                        " is a combination of the others");
        }
    }
    return NumericalMonoid{std::move(raw_generators)};
}

// Multiplies every generator by the denominator lcm and divides the images by
// their common gcd; the resulting integer list must be a minimal generating
// set, which holds whenever the rational generators are the atom set.
inline ScalingResult scale_to_numerical(const PuiseuxMonoid& h) {
    Int scale = denominator_lcm(h);
    std::vector<Int> integerized;
    integerized.reserve(h.generators.size());
    for (const Rat& g : h.generators) {
        integerized.push_back(Int(numerator(g)) * (scale / Int(denominator(g))));
    }
    Int normalization_gcd = 0;
    for (const Int& v : integerized) {
        normalization_gcd = boost::multiprecision::gcd(normalization_gcd, v);
    }
    for (Int& v : integerized) {
        v /= normalization_gcd;
    }
    return ScalingResult{make_numerical(std::move(integerized)), std::move(scale),
                         std::move(normalization_gcd)};
}

}  // namespace lengthforge
