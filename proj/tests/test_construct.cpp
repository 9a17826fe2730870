#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace lengthforge;
using testutil::ints;
using testutil::rats;

TEST_CASE("coefficients") {
    CHECK(coefficients(2).values == ints({1, -1}));
    CHECK(coefficients(3).values == ints({1, 3, -4}));
    CHECK(coefficients(4).values == ints({1, 4, 16, -21}));
    CHECK_THROWS_AS(coefficients(1), std::invalid_argument);
    CHECK_THROWS_AS(coefficients(0), std::invalid_argument);
}

TEST_CASE("coefficient invariants hold for every admissible level") {
    for (unsigned k = 2; k <= 12; ++k) {
        CoefficientVector c = coefficients(k);
        CAPTURE(k);
        REQUIRE(c.values.size() == k);
        Int sum = 0;
        Int magnitude_bound = boost::multiprecision::pow(Int(k), k - 1);
        std::set<Int> distinct;
        for (const Int& v : c.values) {
            sum += v;
            CHECK(v != 0);
            CHECK(abs(v) <= magnitude_bound);
            distinct.insert(v);
        }
        CHECK(sum == 0);
        CHECK(distinct.size() == k);
    }
}

TEST_CASE("level_atoms") {
    CHECK(level_atoms(2, Int(7)) == rats({"4/7", "3/7"}));
    CHECK(level_atoms(3, Int(37)) == rats({"38/111", "40/111", "11/37"}));
    CHECK(level_atoms(4, Int(331)) == rats({"83/331", "335/1324", "347/1324", "155/662"}));
    CHECK_THROWS_WITH(level_atoms(2, Int(8)), Catch::Matchers::ContainsSubstring("not prime"));
    CHECK_THROWS_WITH(level_atoms(3, Int(31)),
                      Catch::Matchers::ContainsSubstring("does not exceed"));
}

TEST_CASE("level atoms sum to 1, stay in (1/(k+1), 1), and have valuation -1") {
    for (unsigned k = 2; k <= 8; ++k) {
        Int p = next_qualifying_prime(level_prime_bound(k), Int(1));
        std::vector<Rat> atoms = level_atoms(k, p);
        CAPTURE(k, p);
        Rat sum = 0;
        Rat floor = make_rational(Int(1), Int(k) + 1);
        for (const Rat& q : atoms) {
            sum += q;
            CHECK(q > floor);
            CHECK(q < 1);
            CHECK(padic_valuation(p, q) == Valuation{false, -1});
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("base_monoid picks the smallest admissible prime") {
    auto [step2, h2] = base_monoid(2);
    CHECK(step2.prime == 7);
    CHECK(h2.generators == rats({"3/7", "4/7"}));

    auto [step3, h3] = base_monoid(3);
    CHECK(step3.prime == 37);
    CHECK(h3.generators == rats({"11/37", "38/111", "40/111"}));

    auto [step4, h4] = base_monoid(4);
    CHECK(step4.prime == 331);
}

TEST_CASE("extend avoids primes dividing existing denominators") {
    auto [base2_step, base2] = base_monoid(2);

    SECTION("different level gets the next free prime") {
        auto [step, extended] = extend(base2, 3);
        CHECK(step.prime == 37);
        CHECK(extended.generators == rats({"11/37", "38/111", "40/111", "3/7", "4/7"}));
    }
    SECTION("repeated level skips the used prime") {
        auto [step, extended] = extend(base2, 2);
        CHECK(step.prime == 11);
        CHECK(step.atoms == rats({"6/11", "5/11"}));
        CHECK(extended.generators.size() == 4);
    }
    SECTION("level-2 extension of the level-3 base reuses 7") {
        auto [base3_step, base3] = base_monoid(3);
        auto [step, extended] = extend(base3, 2);
        CHECK(step.prime == 7);
        CHECK(extended.generators.size() == 5);
    }
}

TEST_CASE("extension leaves factorizations of small elements untouched") {
    auto [base_step, h] = base_monoid(2);
    auto [step, extended] = extend(h, 3);

    // Positions of the old generators inside the extended generator list.
    auto embed = [&](const ExponentVector& v) {
        ExponentVector image(extended.generators.size(), 0);
        for (std::size_t i = 0; i < h.generators.size(); ++i) {
            auto pos = std::lower_bound(extended.generators.begin(), extended.generators.end(),
                                        h.generators[i]);
            REQUIRE(*pos == h.generators[i]);
            image[static_cast<std::size_t>(pos - extended.generators.begin())] = v[i];
        }
        return image;
    };

    std::vector<Rat> samples = h.generators;
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        for (std::size_t j = i; j < h.generators.size(); ++j) {
            Rat sum = h.generators[i] + h.generators[j];
            if (sum < 1) {
                samples.push_back(sum);
            }
        }
    }
    for (const Rat& u : samples) {
        CAPTURE(rat_to_string(u));
        std::vector<ExponentVector> embedded;
        for (const ExponentVector& v : rational_factorizations(h, u).vectors) {
            embedded.push_back(embed(v));
        }
        std::sort(embedded.begin(), embedded.end());
        CHECK(embedded == rational_factorizations(extended, u).vectors);
    }
}

TEST_CASE("realize: single length") {
    RealizationTrace trace = realize({{2, 1}});
    CHECK(trace.scaling.monoid.generators == ints({3, 4}));
    CHECK(trace.scaling.scale == 7);
    CHECK(trace.target == 7);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].prime == 7);
}

TEST_CASE("realize: two lengths") {
    RealizationTrace trace = realize({{2, 1}, {3, 1}});
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].prime == 7);
    CHECK(trace.steps[1].prime == 37);
    CHECK(trace.scaling.monoid.generators == ints({231, 266, 280, 333, 444}));
    CHECK(trace.target == 777);
}

TEST_CASE("realize: single length four") {
    RealizationTrace trace = realize({{4, 1}});
    CHECK(trace.steps[0].prime == 331);
    CHECK(trace.scaling.monoid.generators == ints({310, 332, 335, 347}));
    CHECK(trace.target == 1324);
    FactorizationSet z = factorizations(trace.scaling.monoid, trace.target);
    CHECK(z.vectors == std::vector<ExponentVector>{{1, 1, 1, 1}});
}

TEST_CASE("realize rejects invalid requests") {
    CHECK_THROWS_WITH(realize({{1, 1}, {3, 1}}), Catch::Matchers::ContainsSubstring(">= 2"));
    CHECK_THROWS_WITH(realize({{0, 1}}), Catch::Matchers::ContainsSubstring(">= 2"));
    CHECK_THROWS_WITH(realize({{2, 0}}), Catch::Matchers::ContainsSubstring(">= 1"));
    CHECK_THROWS_AS(realize({}), std::invalid_argument);
    CHECK_THROWS_WITH(realize({{13, 1}}), Catch::Matchers::ContainsSubstring("ceiling"));
    CHECK_NOTHROW(realize({{13, 1}}, RealizeOptions{.max_level = 13}));
}

TEST_CASE("realize is deterministic") {
    RealizationTrace a = realize({{2, 2}, {5, 1}});
    RealizationTrace b = realize({{2, 2}, {5, 1}});
    CHECK(trace_to_json(a).dump() == trace_to_json(b).dump());
}

TEST_CASE("repeated levels draw distinct primes") {
    RealizationTrace trace = realize({{3, 3}});
    REQUIRE(trace.steps.size() == 3);
    std::set<Int> primes;
    for (const LevelStep& step : trace.steps) {
        CHECK(step.k == 3);
        primes.insert(step.prime);
    }
    CHECK(primes.size() == 3);
}

TEST_CASE("realize_delta_superset builds partial-sum length sets") {
    CHECK(realize_delta_superset({1}).lengths == std::vector<std::uint32_t>{2, 3});
    CHECK(realize_delta_superset({1, 2}).lengths == std::vector<std::uint32_t>{2, 3, 5});
    CHECK(realize_delta_superset({3}).lengths == std::vector<std::uint32_t>{2, 5});
    CHECK_THROWS_AS(realize_delta_superset({0}), std::invalid_argument);
    CHECK_THROWS_AS(realize_delta_superset({}), std::invalid_argument);
}
