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

#include <pricediff/complete_pricing.hpp>
#include <pricediff/error.hpp>
#include <pricediff/oracle.hpp>
#include <pricediff/partial_pricing.hpp>
#include <pricediff/single_pricing.hpp>

#include <cmath>

using namespace pricediff;
using doctest::Approx;

namespace {

// Stirling numbers of the second kind by the textbook recurrence.
std::size_t stirling2(std::size_t n, std::size_t k)
{
    if (n == 0 && k == 0) {
        return 1;
    }
    if (n == 0 || k == 0) {
        return 0;
    }
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

} // namespace

TEST_CASE("price_grid spans theta_min/1000 to theta_1")
{
    const auto grid = price_grid(test::market_c(), GridSpec{50});
    REQUIRE(grid.size() == 50);
    CHECK(grid.front() == Approx(1e-3));
    CHECK(grid.back() == 16);
    for (std::size_t g = 1; g < grid.size(); ++g) {
        CHECK(grid[g] / grid[g - 1] == Approx(grid[1] / grid[0]).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)price_grid(test::market_c(), GridSpec{1}), PricingError);
}

TEST_CASE("enumerate_set_partitions counts")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            std::size_t expected = 0;
            for (std::size_t b = 1; b <= k; ++b) {
                expected += stirling2(n, b);
            }
            CHECK(enumerate_set_partitions(n, k).size() == expected);
        }
    }
    CHECK(enumerate_set_partitions(4, 4).size() == 15);
}

TEST_CASE("admission levels")
{
    CHECK(admission_levels(1) == std::vector<std::int64_t>{0, 1});
    CHECK(admission_levels(3) == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(admission_levels(100) == std::vector<std::int64_t>{0, 20, 40, 60, 80, 100});
    CHECK(admission_levels(7).back() == 7);
}

TEST_CASE("oracle_sp fixtures")
{
    const auto b = oracle_sp(test::market_b(), GridSpec{10000});
    CHECK(b.grid_revenue <= 20.0 / 3 * (1 + 1e-12));
    CHECK(b.grid_revenue >= 6.66667 * (1 - 1e-3));

    const auto c = oracle_sp(test::market_c(), GridSpec{10000});
    CHECK(c.grid_revenue == Approx(12).epsilon(1e-3));

    const std::vector<UserGroup> g{{2, 10}};
    const auto one = oracle_sp(validate_market(g, 10), GridSpec{10000});
    CHECK(one.grid_revenue == Approx(10).epsilon(1e-3));

    const auto sol = solve_sp(test::market_b());
    const auto injected = oracle_sp(test::market_b(), GridSpec{10000}, &sol);
    REQUIRE(injected.injected);
    CHECK(injected.injected->feasible);
    CHECK(injected.best_revenue == Approx(sol.revenue));
}

TEST_CASE("oracle_cp fixtures and admission redundancy")
{
    const auto a = oracle_cp(test::market_a(), GridSpec{400});
    CHECK(a.grid_revenue == Approx(2).epsilon(1e-2));
    const auto b = oracle_cp(test::market_b(), GridSpec{400});
    CHECK(b.grid_revenue == Approx(6.763932).epsilon(1e-2));
    CHECK(b.grid_revenue <= 6.763932 * (1 + 1e-6));

    const auto sol = solve_cp(test::market_a());
    const auto full = check_feasibility(test::market_a(), sol.prices, {1, 1});
    const auto partial = check_feasibility(test::market_a(), sol.prices, {1, 0});
    CHECK(full.feasible);
    CHECK(partial.feasible);
    CHECK(full.revenue == partial.revenue);

    const std::vector<UserGroup> four{{4, 1}, {3, 1}, {2, 1}, {1, 1}};
    CHECK_THROWS_AS((void)oracle_cp(validate_market(four, 1), GridSpec{10}), PricingError);
    const std::vector<UserGroup> one{{4, 1}};
    CHECK_THROWS_AS((void)oracle_cp(validate_market(one, 0), GridSpec{10}), PricingError);
}

TEST_CASE("oracle_pp fixtures")
{
    const Market c = test::market_c();
    const auto sol2 = solve_pp(c, 2);
    const auto c2 = oracle_pp(c, 2, GridSpec{400}, &sol2);
    CHECK(c2.grid_revenue == Approx(12.8).epsilon(1e-2));
    CHECK(c2.grid_revenue <= 12.8 * (1 + 1e-9));
    REQUIRE(c2.injected);
    CHECK(c2.injected->feasible);
    CHECK(c2.best_revenue == Approx(12.8));

    CHECK(oracle_pp(c, 3, GridSpec{400}).grid_revenue == Approx(12.8).epsilon(1e-2));
    CHECK(oracle_pp(test::market_a(), 2, GridSpec{400}).grid_revenue == Approx(2).epsilon(1e-2));

    const std::vector<UserGroup> five{{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}};
    CHECK_THROWS_AS((void)oracle_pp(validate_market(five, 1), 2, GridSpec{10}), PricingError);
    CHECK_THROWS_AS((void)oracle_pp(c, 4, GridSpec{10}), PricingError);
}

TEST_CASE("oracles flag infeasible solver answers")
{
    const Market b = test::market_b();
    auto sol = solve_cp(b);
    sol.prices = {1.0, 1.0}; // demands 9 + 1 > S
    const auto r = oracle_cp(b, GridSpec{100}, &sol);
    REQUIRE(r.injected);
    CHECK_FALSE(r.injected->feasible);
    CHECK(r.best_revenue == r.grid_revenue);

    auto sp = solve_sp(b);
    sp.prices[1] *= 1.01;
    CHECK_FALSE(check_feasibility(b, sp).feasible);

    auto pp = solve_pp(test::market_c(), 2);
    pp.prices[2] *= 1.5;
    CHECK_FALSE(check_feasibility(test::market_c(), pp).feasible);
}

TEST_CASE("oracles are deterministic")
{
    const auto x = oracle_pp(test::market_c(), 2, GridSpec{120});
    const auto y = oracle_pp(test::market_c(), 2, GridSpec{120});
    CHECK(x.grid_revenue == y.grid_revenue);
    CHECK(x.prices == y.prices);
    CHECK(x.clusters == y.clusters);
}
