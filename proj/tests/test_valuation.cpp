/*
 * Copyright 2026 The sylperm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sylperm/valuation.hpp"

using namespace sylperm;

TEST_CASE("nu2 on small fixed values") {
    CHECK(nu2(ExactInt(8)) == Valuation(3));
    CHECK(nu2(ExactInt(-12)) == Valuation(2)); // |-12| = 4 * 3
    CHECK(nu2(ExactInt(1)) == Valuation(0));
    CHECK(nu2(ExactInt(0)) == Valuation::infinity());
    CHECK(nu2(ExactInt("6829323892021002240")) == Valuation(31));
}

TEST_CASE("valuation ordering puts infinity on top") {
    CHECK(Valuation(3) < Valuation(4));
    CHECK(Valuation(3) == Valuation(3));
    CHECK(Valuation((std::int64_t(1) << 62)) < Valuation::infinity());
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK_FALSE(Valuation::infinity() < Valuation::infinity());
    CHECK(Valuation(0) < Valuation::infinity());
}

TEST_CASE("valuation addition absorbs infinity") {
    CHECK(Valuation(2) + Valuation(5) == Valuation(7));
    CHECK(Valuation(2) + Valuation::infinity() == Valuation::infinity());
    CHECK(Valuation::infinity() + Valuation::infinity() == Valuation::infinity());
}

TEST_CASE("valuation accessors and rendering") {
    CHECK(Valuation(7).value() == 7);
    CHECK(Valuation(7).to_string() == "7");
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK(Valuation::infinity().is_infinite());
    CHECK_FALSE(Valuation(0).is_infinite());
    CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
    CHECK_THROWS_AS(Valuation(-3), std::invalid_argument);
}

TEST_CASE("nu2 is additive over products") {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<std::int64_t> base(-1000000, 1000000);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactInt x = base(rng);
        const ExactInt y = base(rng);
        CHECK(nu2(x * y) == nu2(x) + nu2(y)); // absorbing when either side is 0
    }
}

TEST_CASE("nu2 reads off the planted exponent") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> odd_half(0, (std::int64_t(1) << 40) - 1);
    for (int e = 0; e <= 60; ++e) {
        const ExactInt odd = 2 * odd_half(rng) + 1;
        const ExactInt x = odd * (ExactInt(1) << e);
        CHECK(nu2(x) == Valuation(e));
        CHECK(nu2(-x) == Valuation(e));
    }
}

TEST_CASE("digit_sum_base2 on fixed values") {
    CHECK(digit_sum_base2(0) == 0);
    CHECK(digit_sum_base2(7) == 3);
    for (int n = 0; n <= 20; ++n) CHECK(digit_sum_base2(std::uint64_t(1) << n) == 1);
}

TEST_CASE("nu2_factorial matches the exactly computed factorial") {
    CHECK(nu2_factorial(0) == 0);
    CHECK(nu2_factorial(1) == 0);
    CHECK(nu2_factorial(7) == 4); // 7! = 5040 = 2^4 * 315
    ExactInt fact = 1;
    for (std::uint64_t k = 1; k <= 300; ++k) {
        fact *= k;
        CHECK(nu2(fact) == Valuation(nu2_factorial(k)));
    }
    for (int n = 0; n <= 10; ++n)
        CHECK(nu2_factorial(std::uint64_t(1) << n) == (std::int64_t(1) << n) - 1);
}

TEST_CASE("binary digit sum peaks exactly at 2^n - 1") {
    // The pivot behind the valuation analysis: s_{2^n - 1} = n while every
    // smaller index has a strictly smaller digit sum.
    for (int n = 1; n <= 16; ++n) {
        const std::uint64_t m = (std::uint64_t(1) << n) - 1;
        CHECK(digit_sum_base2(m) == n);
        for (std::uint64_t k = 0; k < m; ++k) {
            if (digit_sum_base2(k) >= n) {
                FAIL("digit sum should stay below " << n << " before " << m << ", broke at " << k);
            }
        }
    }
    SUCCEED("digit sums below 2^n - 1 stay under n for n <= 16");
}
