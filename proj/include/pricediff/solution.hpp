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

#ifndef PRICEDIFF_SOLUTION_HPP
#define PRICEDIFF_SOLUTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace pricediff {

enum class Scheme
{
    complete,
    single,
    partial
};

std::string_view to_string(Scheme scheme) noexcept;

/// Half-open range [first, last) of 0-based group indices.
struct ClusterRange
{
    std::size_t first{0};
    std::size_t last{0};

    [[nodiscard]] std::size_t size() const noexcept { return last - first; }

    friend bool operator==(const ClusterRange&, const ClusterRange&) = default;
    friend auto operator<=>(const ClusterRange&, const ClusterRange&) = default;
};

/**
 * Consecutive clustering of the theta-descending groups.
 *
 * Group i belongs to cluster j iff ranges[j] contains i.  The top
 * effective_counts[j] groups of cluster j receive positive allocations; a
 * count of zero marks a priced-out cluster.
 */
struct Partition
{
    std::vector<ClusterRange> ranges;
    std::vector<std::size_t> effective_counts;
    std::vector<double> cluster_prices;

    [[nodiscard]] std::size_t levels() const noexcept { return ranges.size(); }
    /// Cluster index of group i.
    [[nodiscard]] std::size_t cluster_of(std::size_t group) const;
};

struct SchemeSolution
{
    Scheme scheme{Scheme::complete};
    std::vector<double> prices;
    std::vector<double> allocations; ///< Per user.
    std::vector<std::int64_t> admitted;
    double shadow_price{0};
    std::size_t effective_threshold{0}; ///< Number of leading groups with positive allocation.
    double revenue{0};
    std::optional<Partition> partition;
};

} // namespace pricediff

#endif // PRICEDIFF_SOLUTION_HPP
