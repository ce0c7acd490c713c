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
 * \file pricediff/complete_pricing.hpp
 *
 * \brief Complete price differentiation: one price per group.
 *
 * Substituting the best response s = theta/p - 1 turns the per-user revenue
 * p*s into theta*s/(1+s).  Maximizing sum_i N_i theta_i s_i/(1+s_i) subject to
 * sum_i N_i s_i <= S is concave, with stationarity
 *
 *     theta_i / (1 + s_i)^2 = lambda   =>   s_i = (sqrt(theta_i/lambda) - 1)^+,
 *     p_i = sqrt(theta_i * lambda).
 *
 * With the top k groups served and capacity binding,
 *
 *     lambda_k = [ sum_{i<=k} N_i sqrt(theta_i) / (S + sum_{i<=k} N_i) ]^2.
 *
 * The threshold k* is the unique k with theta_k > lambda_k >= theta_{k+1}.
 * All users are admitted: a group is excluded by pricing it at theta_i.
 */

#ifndef PRICEDIFF_COMPLETE_PRICING_HPP
#define PRICEDIFF_COMPLETE_PRICING_HPP

#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <cstddef>

namespace pricediff {

/// lambda_k for the top k groups (1 <= k <= I, S > 0).
/// Throws IndexOutOfRange, or ZeroCapacity when S = 0.
[[nodiscard]] double cp_multiplier(const Market& market, std::size_t k);

/// Number of served groups at the optimum (requires S > 0, else ZeroCapacity).
[[nodiscard]] std::size_t cp_threshold(const Market& market);

[[nodiscard]] SchemeSolution solve_cp(const Market& market);

} // namespace pricediff

#endif // PRICEDIFF_COMPLETE_PRICING_HPP
