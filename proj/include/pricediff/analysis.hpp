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

#ifndef PRICEDIFF_ANALYSIS_HPP
#define PRICEDIFF_ANALYSIS_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pricediff {

/// CP revenue over SP revenue; 1 when both are zero.
[[nodiscard]] double differentiation_gain(const Market& market);

/// solve_pp revenue for J = 1..I; entry J-1 holds level J.
[[nodiscard]] std::vector<double> revenue_curve(const Market& market);

/// Number of users with a positive allocation.
[[nodiscard]] std::int64_t effective_market_size(const Market& market, const SchemeSolution& solution);

/**
 * Welfare maximizer on a single link: maximize sum N_i theta_i ln(1 + s_i)
 * subject to sum N_i s_i <= S.
 *
 * Same threshold scan as single pricing, but stationarity reads
 * theta_i / (1 + s_i) = mu rather than theta_i / (1 + s_i)^2 = lambda, so
 * mu_k = A_k / (S + B_k) with A_k, B_k the served sums of N theta and N.
 */
struct WelfareOptimum
{
    std::vector<double> allocations;
    double welfare{0};
    double shadow_price{0}; ///< mu.
    std::size_t effective_threshold{0};
};

[[nodiscard]] WelfareOptimum welfare_optimum(const Market& market);

/// sum N_i theta_i ln(1 + s_i) over a solution's allocations.
[[nodiscard]] double welfare_of(const Market& market, const SchemeSolution& solution);

struct SchemeFigures
{
    double revenue{0};
    std::int64_t effective_market_size{0};
    double welfare{0};
};

struct ComparisonReport
{
    std::vector<double> revenues; ///< Index J-1.
    double differentiation_gain{1};
    SchemeFigures single;
    SchemeFigures complete;
    std::vector<SchemeFigures> partial; ///< Index J-1.
    WelfareOptimum welfare;
};

[[nodiscard]] ComparisonReport compare_schemes(const Market& market);

} // namespace pricediff

#endif // PRICEDIFF_ANALYSIS_HPP
