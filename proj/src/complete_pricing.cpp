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

#include <pricediff/complete_pricing.hpp>

#include "detail.hpp"

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <cmath>
#include <string>

namespace pricediff {

double cp_multiplier(const Market& market, std::size_t k)
{
    if (k < 1 || k > market.size()) {
        throw PricingError(ErrorCode::IndexOutOfRange,
                           "threshold " + std::to_string(k) + " outside 1.." + std::to_string(market.size()));
    }
    if (market.capacity() <= 0) {
        throw PricingError(ErrorCode::ZeroCapacity, "multiplier undefined for zero capacity");
    }
    double weighted_root = 0;
    double users = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& g = market.group(i);
        weighted_root += static_cast<double>(g.count) * std::sqrt(g.theta);
        users += static_cast<double>(g.count);
    }
    const double root = weighted_root / (market.capacity() + users);
    return root * root;
}

std::size_t cp_threshold(const Market& market)
{
    // Group k is served iff theta_k > lambda_k; at equality it demands nothing
    // and is excluded, which keeps k* unique.
    std::size_t last_served = 1;
    for (std::size_t k = 1; k <= market.size(); ++k) {
        const double lambda = cp_multiplier(market, k);
        const bool served = clearly_less(lambda, market.theta_or_zero(k - 1));
        if (!served) {
            break;
        }
        last_served = k;
        if (approx_ge(lambda, market.theta_or_zero(k))) {
            return k;
        }
    }
    return last_served;
}

SchemeSolution solve_cp(const Market& market)
{
    if (market.capacity() <= 0) {
        return detail::priced_out_solution(market, Scheme::complete);
    }
    const std::size_t k = cp_threshold(market);
    const double lambda = cp_multiplier(market, k);

    std::vector<double> prices;
    prices.reserve(market.size());
    for (std::size_t i = 0; i < market.size(); ++i) {
        const double theta = market.group(i).theta;
        prices.push_back(i < k ? std::sqrt(theta * lambda) : theta);
    }
    return detail::solution_from_prices(market, Scheme::complete, std::move(prices), lambda);
}

} // namespace pricediff
