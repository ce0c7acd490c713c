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

#ifndef PRICEDIFF_SRC_DETAIL_HPP
#define PRICEDIFF_SRC_DETAIL_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace pricediff::detail {

/// Candidate revenue beats the incumbent by more than rounding noise.
inline bool improves(double candidate, double incumbent)
{
    return candidate > incumbent + 1e-12 * std::max(1.0, std::abs(incumbent));
}

/// Completes a solution from per-group prices: demands, full admission,
/// revenue and effective threshold.
SchemeSolution solution_from_prices(const Market& market, Scheme scheme, std::vector<double> prices,
                                    double shadow_price);

/// Zero-capacity outcome: everyone priced out at p_i = theta_i.
SchemeSolution priced_out_solution(const Market& market, Scheme scheme);

} // namespace pricediff::detail

#endif // PRICEDIFF_SRC_DETAIL_HPP
