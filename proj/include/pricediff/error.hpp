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

#ifndef PRICEDIFF_ERROR_HPP
#define PRICEDIFF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pricediff {

enum class ErrorCode
{
    EmptyMarket,
    InvalidTheta,
    InvalidCapacity,
    InvalidCount,
    NonPositivePrice,
    LengthMismatch,
    IndexOutOfRange,
    ZeroCapacity,
    NoActiveCluster,
    InvalidLevels,
    TooManyGroups,
    InvalidGrid,
    ParseError
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error code.
class PricingError : public std::runtime_error
{
public:
    PricingError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pricediff

#endif // PRICEDIFF_ERROR_HPP
