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

#ifndef PRICEDIFF_SCENARIO_HPP
#define PRICEDIFF_SCENARIO_HPP

#include <pricediff/market.hpp>

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pricediff {

/**
 * Scenario file contents, groups in file order.
 *
 * The file is a JSON document:
 *
 *     { "label": "optional", "capacity": 3,
 *       "groups": [ { "theta": 16, "count": 1 }, ... ] }
 */
struct Scenario
{
    double capacity{0};
    std::vector<UserGroup> groups;
    std::string label;

    [[nodiscard]] Market market() const { return validate_market(groups, capacity); }
};

/// Throws PricingError: ParseError with field context, or the validation code.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

/// Reads and parses a file; ParseError if it cannot be opened.
[[nodiscard]] Scenario load_scenario(const std::string& path);

/// Random test market: theta log-uniform on [0.1, 100] with no two thetas
/// within tie_tolerance, counts uniform on 1..100, capacity log-uniform on
/// [0.1, 100].
[[nodiscard]] Market random_market(std::mt19937_64& rng, std::size_t groups);

} // namespace pricediff

#endif // PRICEDIFF_SCENARIO_HPP
