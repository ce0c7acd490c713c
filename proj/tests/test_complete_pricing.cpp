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
#include <pricediff/scenario.hpp>

#include <cmath>
#include <random>

using namespace pricediff;
using doctest::Approx;

namespace {

// Demand of the top k groups at p_i = sqrt(theta_i lambda), minus S.
double residual(const Market& m, std::size_t k, double lambda)
{
    double d = -m.capacity();
    for (std::size_t i = 0; i < k; ++i) {
        d += static_cast<double>(m.group(i).count) * (std::sqrt(m.group(i).theta / lambda) - 1);
    }
    return d;
}

} // namespace

TEST_CASE("cp_multiplier closed form")
{
    const Market a = test::market_a();
    const Market b = test::market_b();
    const Market c = test::market_c();
    CHECK(cp_multiplier(a, 1) == Approx(1.0).epsilon(1e-15));
    CHECK(cp_multiplier(b, 2) == Approx(std::pow((std::sqrt(10.0) + std::sqrt(2.0)) / 4, 2)).epsilon(1e-15));
    CHECK(cp_multiplier(b, 2) == Approx(1.309017).epsilon(1e-6));
    CHECK(cp_multiplier(c, 2) == Approx(1.44).epsilon(1e-15));

    CHECK(std::abs(residual(a, 1, cp_multiplier(a, 1))) < 1e-12);
    CHECK(std::abs(residual(b, 2, cp_multiplier(b, 2))) < 1e-12);
    CHECK(std::abs(residual(c, 2, cp_multiplier(c, 2))) < 1e-12);

    CHECK_THROWS_AS((void)cp_multiplier(a, 0), PricingError);
    CHECK_THROWS_AS((void)cp_multiplier(a, 3), PricingError);
    const std::vector<UserGroup> g{{4, 1}};
    try {
        (void)cp_multiplier(validate_market(g, 0), 1);
        FAIL("expected ZeroCapacity");
    } catch (const PricingError& e) {
        CHECK(e.code() == ErrorCode::ZeroCapacity);
    }
}

TEST_CASE("cp_threshold picks the consistent window")
{
    CHECK(cp_threshold(test::market_a()) == 1);
    CHECK(cp_threshold(test::market_b()) == 2);
    CHECK(cp_threshold(test::market_c()) == 2);
    // Market A, k = 2 lands exactly on theta_2 and is excluded.
    CHECK(cp_multiplier(test::market_a(), 2) == Approx(1.0));
    CHECK(cp_multiplier(test::market_c(), 3) == Approx(std::pow(7.0 / 6, 2)));

    // Reference: enumerate windows theta_k > lambda_k >= theta_{k+1}.
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const Market m = random_market(rng, 1 + t % 6);
        std::size_t found = 0;
        for (std::size_t k = 1; k <= m.size(); ++k) {
            const double lambda = cp_multiplier(m, k);
            if (m.group(k - 1).theta > lambda && lambda >= m.theta_or_zero(k)) {
                found = k;
                break;
            }
        }
        REQUIRE(found > 0);
        CHECK(cp_threshold(m) == found);
    }
}

TEST_CASE("solve_cp fixtures")
{
    const auto a = solve_cp(test::market_a());
    CHECK(a.scheme == Scheme::complete);
    CHECK(a.prices[0] == Approx(2));
    CHECK(a.prices[1] == Approx(4 - 3)); // priced out at theta_2 = 1
    CHECK(a.allocations[0] == Approx(1));
    CHECK(a.allocations[1] == 0);
    CHECK(a.revenue == Approx(2));
    CHECK(a.effective_threshold == 1);

    const auto b = solve_cp(test::market_b());
    CHECK(b.prices[0] == Approx(3.618034).epsilon(1e-6));
    CHECK(b.prices[1] == Approx(1.618034).epsilon(1e-6));
    CHECK(b.allocations[0] == Approx(1.763932).epsilon(1e-6));
    CHECK(b.allocations[1] == Approx(0.236068).epsilon(1e-6));
    CHECK(b.revenue == Approx(6.763932).epsilon(1e-6));
    CHECK(b.effective_threshold == 2);
    CHECK(b.shadow_price == Approx(1.309017).epsilon(1e-6));

    const auto c = solve_cp(test::market_c());
    CHECK(c.prices[0] == Approx(4.8));
    CHECK(c.prices[1] == Approx(2.4));
    CHECK(c.prices[2] == 1.0);
    CHECK(c.allocations[0] == Approx(7.0 / 3));
    CHECK(c.allocations[1] == Approx(2.0 / 3));
    CHECK(c.allocations[2] == 0);
    CHECK(c.revenue == Approx(12.8));

    // Reference: revenue maximized directly over allocations.
    for (const auto& m : {test::market_a(), test::market_b(), test::market_c()}) {
        CHECK(solve_cp(m).revenue == Approx(test::cp_revenue_by_allocation(m)).epsilon(1e-9));
    }
}

TEST_CASE("solve_cp with zero capacity prices everyone out")
{
    const std::vector<UserGroup> g{{5, 2}, {3, 1}};
    const auto sol = solve_cp(validate_market(g, 0));
    CHECK(sol.revenue == 0);
    CHECK(sol.prices == std::vector<double>{5, 3});
    CHECK(sol.allocations == std::vector<double>{0, 0});
    CHECK(sol.shadow_price == 5);
    CHECK(sol.effective_threshold == 0);
}

TEST_CASE("solve_cp properties on random markets")
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const Market m = random_market(rng, 1 + t % 6);
        const auto sol = solve_cp(m);
        const std::size_t k = sol.effective_threshold;
        double used = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto& g = m.group(i);
            used += static_cast<double>(g.count) * sol.allocations[i];
            CHECK(sol.admitted[i] == g.count);
            if (i < k) {
                CHECK(sol.prices[i] * sol.allocations[i] == Approx(g.theta - sol.prices[i]).epsilon(1e-9));
            } else {
                CHECK(sol.allocations[i] == 0);
                CHECK(sol.prices[i] == g.theta);
            }
            if (i > 0 && i < k) {
                CHECK(sol.prices[i] < sol.prices[i - 1]);
                CHECK(sol.allocations[i] < sol.allocations[i - 1]);
            }
        }
        CHECK(used == Approx(m.capacity()).epsilon(1e-9));

        // Scaling theta by c scales prices and revenue, keeps allocations.
        const auto scaled = solve_cp(test::with_groups(m, [](UserGroup g) { g.theta *= 3; return g; }, m.capacity()));
        CHECK(scaled.revenue == Approx(3 * sol.revenue).epsilon(1e-9));
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(scaled.allocations[i] == Approx(sol.allocations[i]).epsilon(1e-9));
        }
        // Replicating users and capacity.
        const auto rep = solve_cp(test::with_groups(m, [](UserGroup g) { g.count *= 2; return g; }, 2 * m.capacity()));
        CHECK(rep.revenue == Approx(2 * sol.revenue).epsilon(1e-9));
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(rep.prices[i] == Approx(sol.prices[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("solve_cp matches direct allocation maximization")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        const Market m = random_market(rng, 1 + t % 3);
        CHECK(solve_cp(m).revenue == Approx(test::cp_revenue_by_allocation(m)).epsilon(1e-7));
    }
}
