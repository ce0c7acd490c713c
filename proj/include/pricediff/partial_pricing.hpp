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
 * \file pricediff/partial_pricing.hpp
 *
 * \brief Partial price differentiation with J price levels.
 *
 * Groups are clustered into J consecutive runs of the theta-descending order;
 * each cluster is charged one price.  The search has three levels:
 *
 *  1. Within a cluster with effective set E (a theta prefix of the cluster),
 *     A = sum_E N_i theta_i and B = sum_E N_i.  Given s units of resource
 *     the cluster price is p = A / (s + B) and its revenue
 *     R(s) = A - A B / (s + B).
 *  2. Across clusters, R_j'(s_j) = lambda gives the water-filling solution
 *       lambda = [ sum_j sqrt(A_j B_j) / (S + sum_j B_j) ]^2,
 *       s_j = sqrt(A_j B_j / lambda) - B_j,   p_j = sqrt(lambda A_j / B_j).
 *  3. Every consecutive partition and every vector of effective counts is
 *     evaluated; combinations whose prices contradict their effective sets
 *     are discarded.
 */

#ifndef PRICEDIFF_PARTIAL_PRICING_HPP
#define PRICEDIFF_PARTIAL_PRICING_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pricediff {

/// Sufficient statistics of a cluster's effective set.
struct ClusterAggregate
{
    double weighted_theta{0}; ///< A_j = sum N_i theta_i.
    double users{0};          ///< B_j = sum N_i.
};

struct Level2Allocation
{
    std::vector<double> resources; ///< s^j per active cluster.
    double shadow_price{0};
};

/// Consecutive partitions of I groups into J non-empty clusters, in
/// lexicographic order of the cut positions.  Throws InvalidLevels.
[[nodiscard]] std::vector<std::vector<ClusterRange>> enumerate_consecutive_partitions(std::size_t groups,
                                                                                      std::size_t levels);

/// Resource split among active clusters.  Returns nullopt when some cluster
/// would need negative resource.  Throws NoActiveCluster or ZeroCapacity.
[[nodiscard]] std::optional<Level2Allocation> pp_level2_allocate(std::span<const ClusterAggregate> aggregates,
                                                                 double capacity);

struct PpEvaluation
{
    double revenue{0};
    double shadow_price{0};
    std::vector<double> cluster_prices;
    std::vector<double> cluster_resources;
};

/// Evaluate one (partition, effective counts) combination; nullopt if the
/// resulting prices are inconsistent with the effective sets.
[[nodiscard]] std::optional<PpEvaluation> pp_evaluate(const Market& market, std::span<const ClusterRange> ranges,
                                                      std::span<const std::size_t> effective_counts);

/// Number of (partition, effective counts) combinations solve_pp visits.
[[nodiscard]] std::uint64_t pp_candidate_count(std::size_t groups, std::size_t levels);

/// Throws InvalidLevels unless 1 <= levels <= I.
[[nodiscard]] SchemeSolution solve_pp(const Market& market, std::size_t levels);

} // namespace pricediff

#endif // PRICEDIFF_PARTIAL_PRICING_HPP
