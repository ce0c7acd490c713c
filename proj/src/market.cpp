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

#include <pricediff/market.hpp>

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace pricediff {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyMarket: return "EmptyMarket";
    case ErrorCode::InvalidTheta: return "InvalidTheta";
    case ErrorCode::InvalidCapacity: return "InvalidCapacity";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroCapacity: return "ZeroCapacity";
    case ErrorCode::NoActiveCluster: return "NoActiveCluster";
    case ErrorCode::InvalidLevels: return "InvalidLevels";
    case ErrorCode::TooManyGroups: return "TooManyGroups";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Market validate_market(std::span<const UserGroup> raw_groups, double capacity)
{
    if (!std::isfinite(capacity) || capacity < 0) {
        throw PricingError(ErrorCode::InvalidCapacity,
                           "capacity must be finite and non-negative, got " + std::to_string(capacity));
    }

    std::vector<UserGroup> groups;
    groups.reserve(raw_groups.size());
    for (const auto& g : raw_groups) {
        if (!std::isfinite(g.theta) || g.theta <= 0) {
            throw PricingError(ErrorCode::InvalidTheta,
                               "theta must be finite and positive, got " + std::to_string(g.theta));
        }
        if (g.count < 0) {
            throw PricingError(ErrorCode::InvalidCount,
                               "count must be non-negative, got " + std::to_string(g.count));
        }
        if (g.count > 0) {
            groups.push_back(g);
        }
    }
    if (groups.empty()) {
        throw PricingError(ErrorCode::EmptyMarket, "no group with a positive count");
    }

    std::stable_sort(groups.begin(), groups.end(),
                     [](const UserGroup& a, const UserGroup& b) { return a.theta > b.theta; });

    // Merge into the leading (largest) theta of each tie run.
    std::vector<UserGroup> merged;
    merged.reserve(groups.size());
    for (const auto& g : groups) {
        if (!merged.empty() && merged.back().theta - g.theta <= tie_tolerance * merged.back().theta) {
            merged.back().count += g.count;
        } else {
            merged.push_back(g);
        }
    }

    return Market(std::move(merged), capacity);
}

PriceSchedule::PriceSchedule(std::vector<double> prices)
    : prices_(std::move(prices))
{
    for (double p : prices_) {
        if (!std::isfinite(p) || p <= 0) {
            throw PricingError(ErrorCode::NonPositivePrice,
                               "prices must be finite and positive, got " + std::to_string(p));
        }
    }
}

double user_demand(double theta, double price)
{
    if (!(price > 0) || !std::isfinite(price)) {
        throw PricingError(ErrorCode::NonPositivePrice, "price must be positive");
    }
    return std::max(theta / price - 1.0, 0.0);
}

double user_surplus(double theta, double price, double allocation)
{
    return theta * std::log1p(allocation) - price * allocation;
}

double total_demand(const Market& market, const PriceSchedule& schedule)
{
    if (schedule.size() != market.size()) {
        throw PricingError(ErrorCode::LengthMismatch,
                           "schedule has " + std::to_string(schedule.size()) + " prices for "
                               + std::to_string(market.size()) + " groups");
    }
    double demand = 0;
    for (std::size_t i = 0; i < market.size(); ++i) {
        const auto& g = market.group(i);
        demand += static_cast<double>(g.count) * user_demand(g.theta, schedule[i]);
    }
    return demand;
}

} // namespace pricediff
