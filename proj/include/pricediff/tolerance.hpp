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

#ifndef PRICEDIFF_TOLERANCE_HPP
#define PRICEDIFF_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace pricediff {

/// Relative tolerance under which two willingness-to-pay values are merged.
inline constexpr double tie_tolerance = 1e-12;

/// Absolute-plus-relative tolerance for capacity and threshold comparisons.
inline constexpr double feasibility_tolerance = 1e-9;

/// a <= b up to feasibility_tolerance (absolute plus relative).
[[nodiscard]] inline bool approx_le(double a, double b) noexcept
{
    return a <= b + feasibility_tolerance * (1.0 + std::max(std::abs(a), std::abs(b)));
}

[[nodiscard]] inline bool approx_ge(double a, double b) noexcept
{
    return approx_le(b, a);
}

/// a < b by more than the tolerance band.
[[nodiscard]] inline bool clearly_less(double a, double b) noexcept
{
    return !approx_ge(a, b);
}

[[nodiscard]] inline bool nearly_equal(double a, double b, double rel) noexcept
{
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace pricediff

#endif // PRICEDIFF_TOLERANCE_HPP
