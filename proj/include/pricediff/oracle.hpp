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
 * \file pricediff/oracle.hpp
 *
 * \brief Brute-force reference solvers.
 *
 * The oracles evaluate the raw pricing objectives on log-spaced price grids
 * and share no code path with the closed-form solvers beyond user_demand.
 * They are slow by construction and meant for tests and the `verify` command.
 *
 * Every oracle optionally re-checks a solver's own answer against the raw
 * constraints.  That separates an infeasible solver answer from a suboptimal
 * one: the best revenue reported includes the injected point only when it is
 * feasible.
 */

#ifndef PRICEDIFF_ORACLE_HPP
#define PRICEDIFF_ORACLE_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pricediff {

/// Log-uniform price grid over [theta_min * 1e-3, theta_1] with `points` entries.
struct GridSpec
{
    std::size_t points{400};
};

/// Grid prices for a market, ascending.  Throws InvalidGrid if points < 2.
[[nodiscard]] std::vector<double> price_grid(const Market& market, GridSpec grid);

/// Raw re-check of a proposed outcome.
struct FeasibilityCheck
{
    bool feasible{false};
    double revenue{0};
    double used_capacity{0};
};

struct OracleResult
{
    double grid_revenue{0};  ///< Best over grid points only.
    double best_revenue{0};  ///< Including the injected solver point when feasible.
    std::vector<double> prices; ///< Per group, attaining grid_revenue.
    std::vector<std::int64_t> admitted;
    std::vector<std::vector<std::size_t>> clusters; ///< PP only.
    std::optional<FeasibilityCheck> injected;
};

/// Check prices / admissions against s_i = (theta_i/p_i - 1)^+ and
/// sum n_i s_i <= S (1 + eps).  Revenue is sum n_i p_i s_i.
[[nodiscard]] FeasibilityCheck check_feasibility(const Market& market, const std::vector<double>& prices,
                                                 const std::vector<std::int64_t>& admitted);

/// Same check for a solver output, additionally enforcing that cluster
/// members of a partial solution share one price.
[[nodiscard]] FeasibilityCheck check_feasibility(const Market& market, const SchemeSolution& solution);

/// Single price grid search.  Requires S > 0 (ZeroCapacity).
[[nodiscard]] OracleResult oracle_sp(const Market& market, GridSpec grid,
                                     const SchemeSolution* solver = nullptr);

/// Per-group grid prices times admission levels.  Requires I <= 3
/// (TooManyGroups) and S > 0.
[[nodiscard]] OracleResult oracle_cp(const Market& market, GridSpec grid,
                                     const SchemeSolution* solver = nullptr);

/// Admission levels tried for a group of `count` users: m + 1 evenly
/// spaced values from 0 to count with m = min(count, 5).
[[nodiscard]] std::vector<std::int64_t> admission_levels(std::int64_t count);

/// All set partitions (not just consecutive ones) into at most `levels`
/// clusters, one grid price per cluster.  Requires I <= 4 and S > 0.
[[nodiscard]] OracleResult oracle_pp(const Market& market, std::size_t levels, GridSpec grid,
                                     const SchemeSolution* solver = nullptr);

/// Restricted-growth enumeration of set partitions of n elements into at
/// most max_blocks blocks.  Each entry maps element -> block id.
[[nodiscard]] std::vector<std::vector<std::size_t>> enumerate_set_partitions(std::size_t n,
                                                                             std::size_t max_blocks);

} // namespace pricediff

#endif // PRICEDIFF_ORACLE_HPP
