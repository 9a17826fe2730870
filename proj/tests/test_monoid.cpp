#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace lengthforge;
using testutil::ints;
using testutil::rats;

TEST_CASE("make_puiseux canonicalizes its generator list") {
    CHECK(make_puiseux(rats({"4/7", "3/7"})).generators == rats({"3/7", "4/7"}));
    CHECK(make_puiseux(rats({"33/111"})).generators == rats({"11/37"}));
    CHECK(make_puiseux(rats({"1/2", "2/4"})).generators == rats({"1/2"}));
    CHECK_THROWS_AS(make_puiseux({}), std::invalid_argument);
    CHECK_THROWS_AS(make_puiseux(rats({"0"})), std::invalid_argument);
    CHECK_THROWS_AS(make_puiseux(rats({"1"})), std::invalid_argument);
    CHECK_THROWS_AS(make_puiseux(rats({"-1/3"})), std::invalid_argument);
    CHECK_THROWS_AS(make_puiseux(rats({"3/2"})), std::invalid_argument);
}

TEST_CASE("make_puiseux is idempotent") {
    PuiseuxMonoid once = make_puiseux(rats({"4/7", "3/7", "8/14", "11/37"}));
    CHECK(make_puiseux(once.generators) == once);
}

TEST_CASE("denominator_lcm") {
    CHECK(denominator_lcm(make_puiseux(rats({"3/7", "4/7"}))) == 7);
    CHECK(denominator_lcm(make_puiseux(rats({"3/7", "4/7", "11/37", "38/111", "40/111"}))) == 777);
    CHECK(denominator_lcm(make_puiseux(rats({"1/2"}))) == 2);
}

TEST_CASE("make_numerical enforces the monoid invariants") {
    CHECK(make_numerical(ints({4, 3})).generators == ints({3, 4}));
    CHECK(make_numerical(ints({1})).generators == ints({1}));
    CHECK_THROWS_WITH(make_numerical(ints({2, 4})),
                      Catch::Matchers::ContainsSubstring("not coprime"));
    CHECK_THROWS_WITH(make_numerical(ints({2, 3, 5})),
                      Catch::Matchers::ContainsSubstring("combination"));
    CHECK_THROWS_AS(make_numerical(ints({0, 3})), std::invalid_argument);
    CHECK_THROWS_AS(make_numerical({}), std::invalid_argument);
}

TEST_CASE("scale_to_numerical maps generators through the denominator lcm") {
    SECTION("two generators over a common denominator") {
        ScalingResult r = scale_to_numerical(make_puiseux(rats({"3/7", "4/7"})));
        CHECK(r.monoid.generators == ints({3, 4}));
        CHECK(r.scale == 7);
        CHECK(r.normalization_gcd == 1);
    }
    SECTION("level-3 atoms alone") {
        ScalingResult r = scale_to_numerical(make_puiseux(rats({"11/37", "38/111", "40/111"})));
        CHECK(r.monoid.generators == ints({33, 38, 40}));
        CHECK(r.scale == 111);
        CHECK(r.normalization_gcd == 1);
    }
    SECTION("both levels together") {
        ScalingResult r = scale_to_numerical(
            make_puiseux(rats({"3/7", "4/7", "11/37", "38/111", "40/111"})));
        CHECK(r.monoid.generators == ints({231, 266, 280, 333, 444}));
        CHECK(r.scale == 777);
        CHECK(r.normalization_gcd == 1);
    }
    SECTION("normalization divides out a common factor") {
        ScalingResult r = scale_to_numerical(make_puiseux(rats({"1/2"})));
        CHECK(r.monoid.generators == ints({1}));
        CHECK(r.scale == 2);
        CHECK(r.normalization_gcd == 2);
    }
    SECTION("non-atomic generator lists are rejected") {
        CHECK_THROWS_WITH(scale_to_numerical(make_puiseux(rats({"1/4", "1/2"}))),
                          Catch::Matchers::ContainsSubstring("combination"));
        CHECK_THROWS_AS(scale_to_numerical(make_puiseux(rats({"2/5", "4/5"}))),
                        std::invalid_argument);
    }
}

TEST_CASE("scaling is an order-preserving bijection on generators") {
    PuiseuxMonoid h = make_puiseux(rats({"3/7", "4/7", "11/37", "38/111", "40/111"}));
    ScalingResult r = scale_to_numerical(h);
    REQUIRE(r.monoid.generators.size() == h.generators.size());
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        CHECK(Rat(r.monoid.generators[i]) ==
              h.generators[i] * Rat(r.scale) / Rat(r.normalization_gcd));
    }
}
