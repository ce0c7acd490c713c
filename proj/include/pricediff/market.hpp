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

/**
 * \file pricediff/market.hpp
 *
 * \brief Problem instance and the user best response.
 *
 * A market is a set of user groups sharing one link of capacity S.  Every
 * user of group i has utility theta_i * ln(1 + s) for s units of resource.
 * Facing a linear price p, a surplus-maximizing user demands
 * (theta_i / p - 1)^+, which every solver in this library relies on.
 */

#ifndef PRICEDIFF_MARKET_HPP
#define PRICEDIFF_MARKET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pricediff {

/// One homogeneous user population.
struct UserGroup
{
    double theta{0};       ///< Willingness to pay (money per unit resource).
    std::int64_t count{0}; ///< Number of users.

    friend bool operator==(const UserGroup&, const UserGroup&) = default;
};

/**
 * \brief Validated, immutable problem instance.
 *
 * Groups are sorted strictly descending by theta and have positive counts.
 * The only way to obtain a Market is through validate_market().
 */
class Market
{
public:
    [[nodiscard]] std::span<const UserGroup> groups() const noexcept { return groups_; }
    [[nodiscard]] const UserGroup& group(std::size_t i) const { return groups_.at(i); }
    [[nodiscard]] std::size_t size() const noexcept { return groups_.size(); }
    [[nodiscard]] double capacity() const noexcept { return capacity_; }

    /// theta of group i (0-based), or 0 past the last group.
    [[nodiscard]] double theta_or_zero(std::size_t i) const noexcept
    {
        return i < groups_.size() ? groups_[i].theta : 0.0;
    }

    friend bool operator==(const Market&, const Market&) = default;

private:
    Market(std::vector<UserGroup> groups, double capacity)
        : groups_(std::move(groups)), capacity_(capacity)
    {
    }

    friend Market validate_market(std::span<const UserGroup> raw_groups, double capacity);

    std::vector<UserGroup> groups_;
    double capacity_{0};
};

/**
 * \brief Normalize raw input into a Market.
 *
 * Drops empty groups, sorts by descending theta and merges groups whose
 * thetas agree to tie_tolerance (relative), summing their counts.
 *
 * Throws PricingError with EmptyMarket, InvalidTheta, InvalidCapacity or
 * InvalidCount.
 */
Market validate_market(std::span<const UserGroup> raw_groups, double capacity);

/// Re-validate an existing market; the result compares equal to the input.
inline Market validate_market(const Market& market)
{
    return validate_market(market.groups(), market.capacity());
}

/// Per-group linear prices; every entry strictly positive and finite.
class PriceSchedule
{
public:
    explicit PriceSchedule(std::vector<double> prices);

    [[nodiscard]] std::span<const double> prices() const noexcept { return prices_; }
    [[nodiscard]] std::size_t size() const noexcept { return prices_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return prices_[i]; }

private:
    std::vector<double> prices_;
};

/// Best response of a user: max(theta / price - 1, 0).  Throws NonPositivePrice.
[[nodiscard]] double user_demand(double theta, double price);

/// theta * ln(1 + allocation) - price * allocation.
[[nodiscard]] double user_surplus(double theta, double price, double allocation);

/// Sum over groups of count * user_demand.  Throws LengthMismatch.
[[nodiscard]] double total_demand(const Market& market, const PriceSchedule& schedule);

} // namespace pricediff

#endif // PRICEDIFF_MARKET_HPP
