/*
 * Copyright 2026 The pricediff Authors
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

#include <doctest.h>

#include "support.hpp"

#include <pricediff/error.hpp>
#include <pricediff/market.hpp>

#include <cmath>
#include <limits>
#include <random>

using namespace pricediff;
using doctest::Approx;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const PricingError& e) {
        return e.code();
    }
    FAIL("expected a PricingError");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("validate_market sorts and merges ties")
{
    const std::vector<UserGroup> unsorted{{1, 1}, {4, 1}};
    const Market a = validate_market(unsorted, 1);
    REQUIRE(a.size() == 2);
    CHECK(a.group(0) == UserGroup{4, 1});
    CHECK(a.group(1) == UserGroup{1, 1});
    CHECK(a == test::market_a());

    const std::vector<UserGroup> ties{{4, 1}, {4, 2}, {1, 1}};
    const Market m = validate_market(ties, 1);
    REQUIRE(m.size() == 2);
    CHECK(m.group(0) == UserGroup{4, 3});
    CHECK(m.group(1) == UserGroup{1, 1});

    // Within tie_tolerance relative counts as equal.
    const std::vector<UserGroup> near{{4, 1}, {4 * (1 - 1e-13), 2}};
    CHECK(validate_market(near, 1).size() == 1);
    const std::vector<UserGroup> apart{{4, 1}, {4 * (1 - 1e-10), 2}};
    CHECK(validate_market(apart, 1).size() == 2);
}

TEST_CASE("validate_market drops empty groups and rejects bad input")
{
    const std::vector<UserGroup> with_empty{{4, 0}, {2, 3}};
    const Market m = validate_market(with_empty, 5);
    REQUIRE(m.size() == 1);
    CHECK(m.group(0).theta == 2);

    const std::vector<UserGroup> one{{4, 1}};
    CHECK(code_of([&] { (void)validate_market(one, -1); }) == ErrorCode::InvalidCapacity);
    CHECK(code_of([&] { (void)validate_market(one, std::numeric_limits<double>::infinity()); })
          == ErrorCode::InvalidCapacity);
    CHECK(code_of([&] { (void)validate_market(one, std::nan("")); }) == ErrorCode::InvalidCapacity);

    const std::vector<UserGroup> none{{4, 0}};
    CHECK(code_of([&] { (void)validate_market(none, 1); }) == ErrorCode::EmptyMarket);
    CHECK(code_of([&] { (void)validate_market(std::vector<UserGroup>{}, 1); }) == ErrorCode::EmptyMarket);

    const std::vector<UserGroup> zero_theta{{0, 1}};
    CHECK(code_of([&] { (void)validate_market(zero_theta, 1); }) == ErrorCode::InvalidTheta);
    const std::vector<UserGroup> nan_theta{{std::nan(""), 1}};
    CHECK(code_of([&] { (void)validate_market(nan_theta, 1); }) == ErrorCode::InvalidTheta);
    const std::vector<UserGroup> negative{{2, -1}};
    CHECK(code_of([&] { (void)validate_market(negative, 1); }) == ErrorCode::InvalidCount);

    // Zero capacity is a valid instance.
    CHECK(validate_market(one, 0).capacity() == 0);
}

TEST_CASE("validate_market is idempotent")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> theta(0.1, 50);
    std::uniform_int_distribution<std::int64_t> count(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<UserGroup> raw;
        for (int i = 0; i < 6; ++i) {
            // Duplicate some values to exercise merging.
            raw.push_back({i % 2 == 0 ? theta(rng) : std::round(theta(rng)) + 1, count(rng) + 1});
        }
        const Market m = validate_market(raw, 3);
        CHECK(validate_market(m) == m);
        for (std::size_t i = 1; i < m.size(); ++i) {
            CHECK(m.group(i - 1).theta > m.group(i).theta);
        }
    }
}

TEST_CASE("user_demand")
{
    CHECK(user_demand(2, 1) == 1);
    CHECK(user_demand(1, 2) == 0);
    CHECK(user_demand(10, 3.618034) == Approx(1.763932).epsilon(1e-6));
    CHECK(code_of([] { (void)user_demand(1, 0); }) == ErrorCode::NonPositivePrice);
    CHECK(code_of([] { (void)user_demand(1, -2); }) == ErrorCode::NonPositivePrice);

    // Reference: direct maximization of the surplus on a fine grid.
    const double ref = test::grid_best_response(10, 3.618034, 4);
    CHECK(std::abs(user_demand(10, 3.618034) - ref) < 1e-5);
    CHECK(std::abs(user_demand(2, 1) - test::grid_best_response(2, 1, 4)) < 1e-5);
    CHECK(test::grid_best_response(1, 2, 4) == 0);
}

TEST_CASE("user_surplus")
{
    CHECK(user_surplus(2, 1, 1) == Approx(2 * std::log(2.0) - 1).epsilon(1e-12));
    CHECK(user_surplus(2, 1, 1) == Approx(0.386294).epsilon(1e-6));
    CHECK(user_surplus(1, 2, 0) == 0);
    const double s = user_demand(2, 1);
    CHECK(user_surplus(2, 1, s) >= user_surplus(2, 1, s + 0.01));
    CHECK(user_surplus(2, 1, s) >= user_surplus(2, 1, s - 0.01));
}

TEST_CASE("total_demand")
{
    CHECK(total_demand(test::market_a(), PriceSchedule({2, 1})) == 1);
    CHECK(total_demand(test::market_b(), PriceSchedule({3.618034, 1.618034})) == Approx(2.0).epsilon(1e-6));
    const Market c = test::market_c();
    CHECK(total_demand(c, PriceSchedule({16, 4, 1})) == 0);
    CHECK(code_of([&] { (void)total_demand(c, PriceSchedule({1, 2})); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] { PriceSchedule bad({1, 0}); }) == ErrorCode::NonPositivePrice);
}

TEST_CASE("demand properties on random samples")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 2000; ++t) {
        const double theta = std::exp(u(rng));
        const double p = std::exp(u(rng));
        const double d = user_demand(theta, p);
        CHECK(d >= 0);
        CHECK((d == 0) == (p >= theta));
        CHECK(user_demand(theta, p * 1.1) <= d);
        CHECK(user_demand(theta * 1.1, p) >= d);
        if (p < theta) {
            CHECK(p * d == Approx(theta - p).epsilon(1e-12));
        }
        for (double s : {0.0, d * 0.5, d * 1.5 + 0.1, d + 1e-3, std::exp(u(rng))}) {
            CHECK(user_surplus(theta, p, d) >= user_surplus(theta, p, s) - 1e-12);
        }
    }
}
