#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "monoid.hpp"

namespace lengthforge {

// One exponent per generator, in ascending generator order.
using ExponentVector = std::vector<std::uint32_t>;

// Complete set of factorizations of `target`, lexicographically ascending.
struct FactorizationSet {
    Rat target;
    std::vector<ExponentVector> vectors;
};

struct LengthProfile {
    std::vector<std::uint32_t> lengths;
    std::map<std::uint32_t, std::uint64_t> counts;

    friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
};

struct DeltaSet {
    std::vector<std::uint32_t> distances;

    friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

// Caps table sizes and enumeration node counts. Overridable per call; the CLI
// reads LENGTHFORGE_BUDGET into this.
struct Budget {
    std::size_t limit = 100'000'000;
};

// `standard`: a is squarefree when no b, c in the monoid with b != 0, c != 0
// satisfy a = 2b + c. `strong` additionally forbids a = 2b.
enum class SquarefreeMode { standard, strong };

namespace detail {

inline std::uint32_t checked_exponent(const Int& e) {
    if (e > std::numeric_limits<std::uint32_t>::max()) {
        throw BudgetError("exponent exceeds the representable range");
    }
    return static_cast<std::uint32_t>(e);
}

// Least monoid element in each residue class mod the smallest generator,
// computed as shortest paths on the residue graph. Gives O(1) membership for
// arbitrarily large elements. Buildable only when the smallest generator fits
// the budget and the distances fit 64 bits.
struct AperyTable {
    static constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> least;

    bool contains(const Int& x) const {
        auto r = static_cast<std::uint64_t>(x % modulus);
        return least[r] != kUnreachable && Int(least[r]) <= x;
    }
};

inline std::optional<AperyTable> build_apery(const NumericalMonoid& m, std::size_t limit) {
    const Int& smallest = m.generators.front();
    const Int& largest = m.generators.back();
    if (smallest > limit || largest > std::numeric_limits<std::uint32_t>::max()) {
        return std::nullopt;
    }
    auto modulus = static_cast<std::uint64_t>(smallest);
    std::vector<std::uint64_t> dist(modulus, AperyTable::kUnreachable);
    dist[0] = 0;
    using Node = std::pair<std::uint64_t, std::uint64_t>;  // (distance, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> frontier;
    frontier.emplace(0, 0);
    while (!frontier.empty()) {
        auto [d, r] = frontier.top();
        frontier.pop();
        if (d != dist[r]) {
            continue;
        }
        for (std::size_t i = 1; i < m.generators.size(); ++i) {
            auto g = static_cast<std::uint64_t>(m.generators[i]);
            std::uint64_t nr = (r + g) % modulus;
            std::uint64_t nd = d + g;
            if (nd < dist[nr]) {
                dist[nr] = nd;
                frontier.emplace(nd, nr);
            }
        }
    }
    return AperyTable{modulus, std::move(dist)};
}

}  // namespace detail

// Membership in the numerical monoid. Small smallest generator: residue table
// (one entry per residue class). Large generators: bounded knapsack descent,
// feasible because any representation of x has length at most x / min(gens).
inline bool member_q(const NumericalMonoid& m, const Int& x, const Budget& budget = {}) {
    if (x < 0) {
        throw std::invalid_argument("member_q: element must be nonnegative");
    }
    if (x == 0) {
        return true;
    }
    if (auto apery = detail::build_apery(m, budget.limit)) {
        return apery->contains(x);
    }
    return detail::representable(m.generators, x, budget.limit);
}

// Complete factorization enumeration: recursive descent over generators in
// descending order with residual-membership pruning when the residue table is
// available. Output re-sorted lexicographically ascending.
inline FactorizationSet factorizations(const NumericalMonoid& m, const Int& a,
                                       const Budget& budget = {}) {
    if (a < 0) {
        throw std::invalid_argument("factorizations: element must be nonnegative");
    }
    const auto& gens = m.generators;
    auto apery = detail::build_apery(m, budget.limit);
    std::vector<ExponentVector> out;
    ExponentVector current(gens.size(), 0);
    std::size_t nodes = 0;

    auto descend = [&](auto&& self, std::size_t i, const Int& residual) -> void {
        if (++nodes > budget.limit) {
            throw BudgetError("factorizations: enumeration budget exceeded");
        }
        if (apery && !apery->contains(residual)) {
            return;
        }
        if (i == 0) {
            if (residual % gens[0] == 0) {
                current[0] = detail::checked_exponent(residual / gens[0]);
                out.push_back(current);
                current[0] = 0;
            }
            return;
        }
        for (Int e = residual / gens[i]; e >= 0; --e) {
            current[i] = detail::checked_exponent(e);
            self(self, i - 1, residual - e * gens[i]);
        }
        current[i] = 0;
    };
    descend(descend, gens.size() - 1, a);

    std::sort(out.begin(), out.end());
    return FactorizationSet{Rat(a), std::move(out)};
}

inline LengthProfile length_profile(const FactorizationSet& z) {
    LengthProfile profile;
    for (const ExponentVector& v : z.vectors) {
        std::uint64_t total = 0;
        for (std::uint32_t e : v) {
            total += e;
        }
        if (total > std::numeric_limits<std::uint32_t>::max()) {
            throw BudgetError("length_profile: factorization length exceeds range");
        }
        ++profile.counts[static_cast<std::uint32_t>(total)];
    }
    profile.lengths.reserve(profile.counts.size());
    for (const auto& [length, count] : profile.counts) {
        profile.lengths.push_back(length);
    }
    return profile;
}

// Successive differences of a strictly ascending set; empty when |A| <= 1.
inline DeltaSet delta_set(const std::vector<std::uint32_t>& ascending_set) {
    for (std::size_t i = 1; i < ascending_set.size(); ++i) {
        if (ascending_set[i] <= ascending_set[i - 1]) {
            throw std::invalid_argument("delta_set: input must be strictly ascending");
        }
    }
    DeltaSet delta;
    for (std::size_t i = 1; i < ascending_set.size(); ++i) {
        delta.distances.push_back(ascending_set[i] - ascending_set[i - 1]);
    }
    return delta;
}

namespace detail {

// Complete enumeration of exponent vectors over ascending rational generators
// summing exactly to `target`, optionally capped in total length. Terminates
// because every generator is positive.
inline std::vector<ExponentVector> enumerate_rational(const std::vector<Rat>& gens,
                                                      const Rat& target,
                                                      std::optional<std::uint64_t> length_cap,
                                                      std::size_t node_cap) {
    std::vector<ExponentVector> out;
    ExponentVector current(gens.size(), 0);
    std::size_t nodes = 0;

    auto floor_div = [](const Rat& t, const Rat& g) {
        Rat q = t / g;
        return Int(numerator(q) / denominator(q));
    };

    auto descend = [&](auto&& self, std::size_t i, const Rat& remaining,
                       std::uint64_t used_length) -> void {
        if (++nodes > node_cap) {
            throw BudgetError("rational enumeration budget exceeded");
        }
        if (remaining == 0) {
            for (std::size_t z = 0; z <= i; ++z) {
                current[z] = 0;
            }
            out.push_back(current);
            return;
        }
        Int slots = length_cap ? Int(*length_cap - used_length)
                               : Int(std::numeric_limits<std::uint64_t>::max());
        // Everything still available is at most gens[i], so the remaining
        // target must be reachable within the remaining slots.
        if (length_cap && remaining > Rat(slots) * gens[i]) {
            return;
        }
        if (i == 0) {
            Rat q = remaining / gens[0];
            if (denominator(q) == 1 && numerator(q) <= slots) {
                current[0] = checked_exponent(Int(numerator(q)));
                out.push_back(current);
                current[0] = 0;
            }
            return;
        }
        Int max_e = floor_div(remaining, gens[i]);
        if (max_e > slots) {
            max_e = slots;
        }
        for (Int e = max_e; e >= 0; --e) {
            current[i] = checked_exponent(e);
            self(self, i - 1, remaining - Rat(e) * gens[i], used_length + current[i]);
        }
        current[i] = 0;
    };
    descend(descend, gens.size() - 1, target, 0);

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// All factorizations of the element 1 with total length <= length_bound.
// Complete whenever every generator exceeds 1/(length_bound+1): any longer
// combination would sum past 1.
inline FactorizationSet factorizations_of_one(const PuiseuxMonoid& h, unsigned length_bound,
                                              const Budget& budget = {}) {
    if (length_bound < 1) {
        throw std::invalid_argument("factorizations_of_one: length bound must be >= 1");
    }
    Rat threshold(Int(1), Int(length_bound) + 1);
    for (const Rat& g : h.generators) {
        if (g <= threshold) {
            throw std::invalid_argument("factorizations_of_one: generator " + rat_to_string(g) +
                                        " is <= 1/(bound+1); the length bound is unsound");
        }
    }
    return FactorizationSet{
        Rat(1), detail::enumerate_rational(h.generators, Rat(1), length_bound, budget.limit)};
}

// All factorizations of an arbitrary nonnegative rational target, bounded by
// value alone. Used for elements below 1, where the generator sizes make the
// search finite without a length cap.
inline FactorizationSet rational_factorizations(const PuiseuxMonoid& h, const Rat& target,
                                                const Budget& budget = {}) {
    if (target < 0) {
        throw std::invalid_argument("rational_factorizations: target must be nonnegative");
    }
    return FactorizationSet{
        target, detail::enumerate_rational(h.generators, target, std::nullopt, budget.limit)};
}

// The subset of generators admitting no representation as a sum of two or
// more generators. For generator lists produced by the construction this is
// the full list.
inline std::vector<Rat> atoms_of(const PuiseuxMonoid& h, const Budget& budget = {}) {
    const auto& gens = h.generators;
    std::vector<Rat> atoms;
    std::size_t nodes = 0;

    auto decomposable = [&](auto&& self, std::size_t i, const Rat& remaining,
                            std::uint64_t used) -> bool {
        if (++nodes > budget.limit) {
            throw BudgetError("atoms_of: search budget exceeded");
        }
        if (remaining == 0) {
            return used >= 2;
        }
        if (i == 0) {
            Rat q = remaining / gens[0];
            return denominator(q) == 1 && used + static_cast<std::uint64_t>(Int(numerator(q))) >= 2;
        }
        Rat q = remaining / gens[i];
        for (Int e = numerator(q) / denominator(q); e >= 0; --e) {
            if (self(self, i - 1, remaining - Rat(e) * gens[i],
                     used + static_cast<std::uint64_t>(e))) {
                return true;
            }
        }
        return false;
    };

    for (const Rat& g : gens) {
        if (!decomposable(decomposable, gens.size() - 1, g, 0)) {
            atoms.push_back(g);
        }
    }
    return atoms;
}

// Squarefree test: searches b over monoid members in (0, a/2] and tests
// whether a - 2b stays in the monoid. Small elements iterate over a residue
// table; large elements enumerate the (few) members below a/2 directly.
inline bool squarefree_q(const NumericalMonoid& m, const Int& a, SquarefreeMode mode,
                         const Budget& budget = {}) {
    if (a < 0) {
        throw std::invalid_argument("squarefree_q: element must be nonnegative");
    }
    if (a == 0) {
        return true;
    }
    auto apery = detail::build_apery(m, budget.limit);
    Int half = a / 2;

    auto violates = [&](const Int& b) {
        Int c = a - 2 * b;
        if (c == 0) {
            return mode == SquarefreeMode::strong;
        }
        bool c_in_monoid =
            apery ? apery->contains(c) : detail::representable(m.generators, c, budget.limit);
        return c_in_monoid;
    };

    if (apery && half <= budget.limit) {
        for (Int b = 1; b <= half; ++b) {
            if (apery->contains(b) && violates(b)) {
                return false;
            }
        }
        return true;
    }

    // Members of (0, a/2] as explicit sums of generators; the set stays small
    // because each generator consumes a sizable fraction of a/2.
    std::set<Int> members;
    std::size_t nodes = 0;
    auto collect = [&](auto&& self, std::size_t i, const Int& sum) -> void {
        for (std::size_t j = i; j < m.generators.size(); ++j) {
            Int next = sum + m.generators[j];
            if (next > half) {
                continue;
            }
            if (++nodes > budget.limit || members.size() > budget.limit) {
                throw BudgetError("squarefree_q: member enumeration budget exceeded");
            }
            members.insert(next);
            self(self, j, next);
        }
    };
    collect(collect, 0, Int(0));
    for (const Int& b : members) {
        if (violates(b)) {
            return false;
        }
    }
    return true;
}

}  // namespace lengthforge
