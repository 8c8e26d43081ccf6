#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "incircle/core.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace incircle;

TEST_CASE("elementary symmetric functions of small hand-expanded products") {
    SECTION("(x+1)^3") {
        const auto sf = elementary_symmetric(TangentLengths({1.0, 1.0, 1.0}));
        REQUIRE(sf.sigma() == std::vector<double>{1.0, 3.0, 3.0, 1.0});
    }
    SECTION("(x+3)(x+2)(x+1)") {
        const auto sf = elementary_symmetric(TangentLengths({3.0, 2.0, 1.0}));
        REQUIRE(sf.sigma() == std::vector<double>{1.0, 6.0, 11.0, 6.0});
    }
    SECTION("(x+0.5)^2 (x+1.5)^2") {
        const auto sf = elementary_symmetric(TangentLengths({0.5, 0.5, 1.5, 1.5}));
        REQUIRE(sf.sigma() == std::vector<double>{1.0, 4.0, 5.5, 3.0, 0.5625});
    }
}

TEST_CASE("elementary symmetric matches the subset-enumeration oracle") {
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto t = oracles::random_lengths(rng, n, 0.05, 3.0);
        const auto sf = elementary_symmetric(TangentLengths(t));
        const auto brute = oracles::subset_symmetric(t);
        REQUIRE(sf.sigma().size() == brute.size());
        for (std::size_t j = 0; j <= n; ++j) {
            REQUIRE_THAT(sf[j], WithinRel(brute[j], 1e-12));
        }
    }
}

TEST_CASE("elementary symmetric is permutation invariant") {
    std::mt19937_64 rng(20240502);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        auto t = oracles::random_lengths(rng, n, 0.05, 3.0);
        const auto sf = elementary_symmetric(TangentLengths(t));
        std::shuffle(t.begin(), t.end(), rng);
        const auto shuffled = elementary_symmetric(TangentLengths(t));
        for (std::size_t j = 0; j <= n; ++j) {
            REQUIRE_THAT(shuffled[j], WithinRel(sf[j], 1e-13));
        }
    }
}

TEST_CASE("sigma_1 and sigma_n share the rounding path of sum and product") {
    std::mt19937_64 rng(20240503);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 3;  // n <= 4
        const auto t = oracles::random_lengths(rng, n, 0.05, 3.0);
        const auto sf = elementary_symmetric(TangentLengths(t));
        const double sum = std::accumulate(t.begin(), t.end(), 0.0);
        double product = 1.0;
        for (double tj : t) {
            product *= tj;
        }
        REQUIRE(sf[1] == sum);
        REQUIRE(sf[n] == product);
    }
}

TEST_CASE("cyclic_rotate") {
    const std::vector<double> base{1.0, 2.0, 3.0};
    REQUIRE(cyclic_rotate(base, 0) == base);
    REQUIRE(cyclic_rotate(base, 1) == std::vector<double>{2.0, 3.0, 1.0});
    REQUIRE(cyclic_rotate(std::vector<double>{3.0, 4.0, 5.0}, 2) ==
            std::vector<double>{5.0, 3.0, 4.0});
    REQUIRE_THROWS_AS(cyclic_rotate(base, 3), Error);
}

TEST_CASE("SideLengths validates its invariants") {
    REQUIRE_THROWS_AS(SideLengths({3.0, 4.0}), Error);
    REQUIRE_THROWS_AS(SideLengths({3.0, 4.0, 0.0}), Error);
    REQUIRE_THROWS_AS(SideLengths({3.0, 4.0, -5.0}), Error);
    REQUIRE_THROWS_AS(SideLengths({3.0, 4.0, std::numeric_limits<double>::quiet_NaN()}), Error);

    const SideLengths sides({3.0, 4.0, 5.0});
    REQUIRE(sides.perimeter() == 12.0);
    REQUIRE(sides.semiperimeter() == 6.0);
    REQUIRE(sides.odd());
}

TEST_CASE("TangentLengths validates positivity and recomputes s") {
    REQUIRE_THROWS_AS(TangentLengths({1.0, -1.0, 1.0}), Error);
    REQUIRE_THROWS_AS(TangentLengths(std::vector<double>{}), Error);
    try {
        TangentLengths({1.0, 0.0, 1.0});
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::nonpositive_tangent);
    }

    const TangentLengths t({2.0, 1.0, 3.0});
    REQUIRE(t.semiperimeter() == 6.0);
}

TEST_CASE("approximate comparison helpers are scale normalized") {
    REQUIRE(approx_zero(1e-11, 1.0));
    REQUIRE_FALSE(approx_zero(1e-7, 1.0));
    REQUIRE(approx_zero(1e-4, 1e6));
    REQUIRE(approx_eq(1.0, 1.0 + 1e-12, 1.0));
    REQUIRE_FALSE(approx_eq(1.0, 1.001, 1.0));
    REQUIRE(approx_eq(1.0, 1.001, 1.0, 1e-2));
}
