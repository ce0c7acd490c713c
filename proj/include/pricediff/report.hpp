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
 * \file pricediff/report.hpp
 *
 * \brief Deterministic text renderings of solutions and comparisons.
 *
 * All real numbers are printed with six fractional digits, ties rounded to
 * even; a negative zero prints as zero.
 */

#ifndef PRICEDIFF_REPORT_HPP
#define PRICEDIFF_REPORT_HPP

#include <pricediff/analysis.hpp>
#include <pricediff/market.hpp>
#include <pricediff/solution.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pricediff {

enum class ReportFormat
{
    table,
    csv,
    json
};

[[nodiscard]] std::optional<ReportFormat> parse_report_format(std::string_view name);

[[nodiscard]] std::string format_fixed(double value);

[[nodiscard]] std::string render_solution(const Market& market, const SchemeSolution& solution,
                                          ReportFormat format, std::string_view label = {});

[[nodiscard]] std::string render_comparison(const Market& market, const ComparisonReport& report,
                                            ReportFormat format, std::string_view label = {});

} // namespace pricediff

#endif // PRICEDIFF_REPORT_HPP
