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

#ifndef PRICEDIFF_SINGLE_PRICING_HPP
#define PRICEDIFF_SINGLE_PRICING_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <cstddef>

namespace pricediff {

/// Best single price when exactly the top k groups are served.
struct SpCandidate
{
    std::size_t k{0};
    double price{0};
    double demand{0};
    double revenue{0}; ///< -infinity when infeasible.
    bool feasible{false};
};

/**
 * Evaluate the effective-set size k (1 <= k <= I, S > 0).
 *
 * With A_k = sum N_i theta_i and B_k = sum N_i over the top k groups, revenue
 * A_k - p B_k falls in p, so the best price in the window
 * [theta_{k+1}, theta_k) is max(theta_{k+1}, A_k / (S + B_k)).
 */
[[nodiscard]] SpCandidate sp_candidate(const Market& market, std::size_t k);

/// Single pricing optimum; ties go to the smaller k.
[[nodiscard]] SchemeSolution solve_sp(const Market& market);

} // namespace pricediff

#endif // PRICEDIFF_SINGLE_PRICING_HPP
