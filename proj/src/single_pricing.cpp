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

#include <pricediff/single_pricing.hpp>

#include "detail.hpp"

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace pricediff {

SpCandidate sp_candidate(const Market& market, std::size_t k)
{
    if (k < 1 || k > market.size()) {
        throw PricingError(ErrorCode::IndexOutOfRange,
                           "threshold " + std::to_string(k) + " outside 1.." + std::to_string(market.size()));
    }
    if (market.capacity() <= 0) {
        throw PricingError(ErrorCode::ZeroCapacity, "single price undefined for zero capacity");
    }
    double a = 0;
    double b = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& g = market.group(i);
        a += static_cast<double>(g.count) * g.theta;
        b += static_cast<double>(g.count);
    }

    SpCandidate c;
    c.k = k;
    c.price = std::max(market.theta_or_zero(k), a / (market.capacity() + b));
    c.feasible = c.price <= market.group(k - 1).theta * (1.0 - feasibility_tolerance);
    c.demand = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& g = market.group(i);
        c.demand += static_cast<double>(g.count) * (g.theta / c.price - 1.0);
    }
    c.revenue = c.feasible ? a - c.price * b : -std::numeric_limits<double>::infinity();
    return c;
}

SchemeSolution solve_sp(const Market& market)
{
    if (market.capacity() <= 0) {
        return detail::priced_out_solution(market, Scheme::single);
    }
    // k = 1 is always feasible for S > 0.
    SpCandidate best = sp_candidate(market, 1);
    for (std::size_t k = 2; k <= market.size(); ++k) {
        const SpCandidate c = sp_candidate(market, k);
        if (c.feasible && detail::improves(c.revenue, best.revenue)) {
            best = c;
        }
    }
    double served_users = 0;
    for (std::size_t i = 0; i < best.k; ++i) {
        served_users += static_cast<double>(market.group(i).count);
    }
    // Marginal revenue of capacity: d(A - pB)/dS with p = A / (S + B).
    const bool binding = nearly_equal(best.demand, market.capacity(), feasibility_tolerance);
    const double shadow = binding ? best.price * served_users / (market.capacity() + served_users) : 0.0;

    std::vector<double> prices(market.size(), best.price);
    return detail::solution_from_prices(market, Scheme::single, std::move(prices), shadow);
}

} // namespace pricediff
