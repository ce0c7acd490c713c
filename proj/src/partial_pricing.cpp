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

#include <pricediff/partial_pricing.hpp>

#include "detail.hpp"

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <cmath>
#include <string>

namespace pricediff {

namespace {

void check_levels(std::size_t groups, std::size_t levels)
{
    if (levels < 1 || levels > groups) {
        throw PricingError(ErrorCode::InvalidLevels,
                           "levels " + std::to_string(levels) + " outside 1.." + std::to_string(groups));
    }
}

std::vector<ClusterRange> ranges_from_cuts(const std::vector<std::size_t>& cuts, std::size_t groups)
{
    std::vector<ClusterRange> ranges;
    ranges.reserve(cuts.size() + 1);
    std::size_t first = 0;
    for (std::size_t cut : cuts) {
        ranges.push_back({first, cut});
        first = cut;
    }
    ranges.push_back({first, groups});
    return ranges;
}

void check_partition(const Market& market, std::span<const ClusterRange> ranges,
                     std::span<const std::size_t> effective_counts)
{
    if (ranges.empty() || ranges.size() != effective_counts.size()) {
        throw PricingError(ErrorCode::LengthMismatch, "one effective count per cluster required");
    }
    std::size_t next = 0;
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        if (ranges[j].first != next || ranges[j].last <= ranges[j].first) {
            throw PricingError(ErrorCode::IndexOutOfRange, "clusters must be consecutive and non-empty");
        }
        if (effective_counts[j] > ranges[j].size()) {
            throw PricingError(ErrorCode::IndexOutOfRange, "effective count exceeds cluster size");
        }
        next = ranges[j].last;
    }
    if (next != market.size()) {
        throw PricingError(ErrorCode::IndexOutOfRange, "clusters must cover every group");
    }
}

} // namespace

std::vector<std::vector<ClusterRange>> enumerate_consecutive_partitions(std::size_t groups, std::size_t levels)
{
    check_levels(groups, levels);

    // Cut positions c_1 < ... < c_{J-1} drawn from 1..I-1.
    std::vector<std::size_t> cuts(levels - 1);
    for (std::size_t j = 0; j < cuts.size(); ++j) {
        cuts[j] = j + 1;
    }
    std::vector<std::vector<ClusterRange>> out;
    for (;;) {
        out.push_back(ranges_from_cuts(cuts, groups));
        std::size_t j = cuts.size();
        while (j > 0 && cuts[j - 1] == groups - cuts.size() + j - 1) {
            --j;
        }
        if (j == 0) {
            break;
        }
        ++cuts[j - 1];
        for (std::size_t t = j; t < cuts.size(); ++t) {
            cuts[t] = cuts[t - 1] + 1;
        }
    }
    return out;
}

std::optional<Level2Allocation> pp_level2_allocate(std::span<const ClusterAggregate> aggregates, double capacity)
{
    if (aggregates.empty()) {
        throw PricingError(ErrorCode::NoActiveCluster, "no cluster to allocate to");
    }
    if (!(capacity > 0)) {
        throw PricingError(ErrorCode::ZeroCapacity, "cluster allocation needs positive capacity");
    }
    double root_sum = 0;
    double users = 0;
    for (const auto& a : aggregates) {
        root_sum += std::sqrt(a.weighted_theta * a.users);
        users += a.users;
    }
    const double root = root_sum / (capacity + users);

    Level2Allocation alloc;
    alloc.shadow_price = root * root;
    alloc.resources.reserve(aggregates.size());
    for (const auto& a : aggregates) {
        const double s = std::sqrt(a.weighted_theta * a.users) / root - a.users;
        if (s < -feasibility_tolerance * (1.0 + a.users)) {
            return std::nullopt;
        }
        alloc.resources.push_back(std::max(s, 0.0));
    }
    return alloc;
}

std::optional<PpEvaluation> pp_evaluate(const Market& market, std::span<const ClusterRange> ranges,
                                        std::span<const std::size_t> effective_counts)
{
    check_partition(market, ranges, effective_counts);

    std::vector<ClusterAggregate> active;
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        ClusterAggregate agg;
        for (std::size_t i = ranges[j].first; i < ranges[j].first + effective_counts[j]; ++i) {
            const auto& g = market.group(i);
            agg.weighted_theta += static_cast<double>(g.count) * g.theta;
            agg.users += static_cast<double>(g.count);
        }
        if (effective_counts[j] > 0) {
            active.push_back(agg);
        }
    }

    PpEvaluation eval;
    eval.cluster_prices.resize(ranges.size());
    eval.cluster_resources.assign(ranges.size(), 0.0);
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        eval.cluster_prices[j] = market.group(ranges[j].first).theta;
    }
    if (active.empty()) {
        eval.shadow_price = market.group(0).theta;
        return eval;
    }
    if (market.capacity() <= 0) {
        return std::nullopt;
    }

    const auto alloc = pp_level2_allocate(active, market.capacity());
    if (!alloc) {
        return std::nullopt;
    }
    eval.shadow_price = alloc->shadow_price;

    std::size_t a = 0;
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        const std::size_t k = effective_counts[j];
        if (k == 0) {
            continue;
        }
        const ClusterAggregate& agg = active[a];
        const double price = std::sqrt(alloc->shadow_price * agg.weighted_theta / agg.users);
        const double lowest_served = market.group(ranges[j].first + k - 1).theta;
        if (price > lowest_served * (1.0 - feasibility_tolerance)) {
            return std::nullopt;
        }
        if (k < ranges[j].size() && clearly_less(price, market.group(ranges[j].first + k).theta)) {
            return std::nullopt;
        }
        eval.cluster_prices[j] = price;
        eval.cluster_resources[j] = alloc->resources[a];
        eval.revenue += agg.weighted_theta - price * agg.users;
        ++a;
    }
    return eval;
}

std::uint64_t pp_candidate_count(std::size_t groups, std::size_t levels)
{
    std::uint64_t total = 0;
    for (const auto& ranges : enumerate_consecutive_partitions(groups, levels)) {
        std::uint64_t product = 1;
        for (const auto& r : ranges) {
            product *= r.size() + 1;
        }
        total += product;
    }
    return total;
}

SchemeSolution solve_pp(const Market& market, std::size_t levels)
{
    check_levels(market.size(), levels);

    std::optional<PpEvaluation> best;
    Partition best_partition;

    for (const auto& ranges : enumerate_consecutive_partitions(market.size(), levels)) {
        std::vector<std::size_t> counts(ranges.size(), 0);
        for (;;) {
            auto eval = pp_evaluate(market, ranges, counts);
            if (eval && (!best || detail::improves(eval->revenue, best->revenue))) {
                best = std::move(eval);
                best_partition.ranges = ranges;
                best_partition.effective_counts = counts;
            }
            // Odometer over effective counts, last cluster fastest.
            std::size_t j = counts.size();
            while (j > 0 && counts[j - 1] == ranges[j - 1].size()) {
                counts[j - 1] = 0;
                --j;
            }
            if (j == 0) {
                break;
            }
            ++counts[j - 1];
        }
    }

    // The all-priced-out combination is always consistent.
    best_partition.cluster_prices = best->cluster_prices;
    std::vector<double> prices(market.size());
    for (std::size_t j = 0; j < best_partition.ranges.size(); ++j) {
        for (std::size_t i = best_partition.ranges[j].first; i < best_partition.ranges[j].last; ++i) {
            prices[i] = best_partition.cluster_prices[j];
        }
    }
    auto sol = detail::solution_from_prices(market, Scheme::partial, std::move(prices), best->shadow_price);
    sol.partition = std::move(best_partition);
    return sol;
}

} // namespace pricediff
