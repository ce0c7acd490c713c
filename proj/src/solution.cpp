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

#include <pricediff/solution.hpp>

#include "detail.hpp"

#include <pricediff/error.hpp>

#include <string>

namespace pricediff {

std::string_view to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::complete: return "cp";
    case Scheme::single: return "sp";
    case Scheme::partial: return "pp";
    }
    return "unknown";
}

std::size_t Partition::cluster_of(std::size_t group) const
{
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        if (group >= ranges[j].first && group < ranges[j].last) {
            return j;
        }
    }
    throw PricingError(ErrorCode::IndexOutOfRange, "group " + std::to_string(group) + " not in partition");
}

namespace detail {

SchemeSolution solution_from_prices(const Market& market, Scheme scheme, std::vector<double> prices,
                                    double shadow_price)
{
    SchemeSolution sol;
    sol.scheme = scheme;
    sol.shadow_price = shadow_price;
    sol.allocations.reserve(market.size());
    sol.admitted.reserve(market.size());
    for (std::size_t i = 0; i < market.size(); ++i) {
        const auto& g = market.group(i);
        const double s = user_demand(g.theta, prices[i]);
        sol.allocations.push_back(s);
        sol.admitted.push_back(g.count);
        sol.revenue += static_cast<double>(g.count) * prices[i] * s;
        if (s > 0) {
            sol.effective_threshold = i + 1;
        }
    }
    sol.prices = std::move(prices);
    return sol;
}

SchemeSolution priced_out_solution(const Market& market, Scheme scheme)
{
    std::vector<double> prices;
    prices.reserve(market.size());
    for (const auto& g : market.groups()) {
        prices.push_back(g.theta);
    }
    // Any lambda >= theta_1 supports the empty allocation.
    return solution_from_prices(market, scheme, std::move(prices), market.group(0).theta);
}

} // namespace detail
} // namespace pricediff
