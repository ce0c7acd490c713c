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

#ifndef PRICEDIFF_CLI_HPP
#define PRICEDIFF_CLI_HPP

#include <pricediff/market.hpp>
#include <pricediff/oracle.hpp>
#include <pricediff/solution.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pricediff {

/// Exit codes of the command-line front end.
enum ExitCode : int
{
    exit_ok = 0,
    exit_input_error = 1,
    exit_verification_failed = 2,
    exit_invariant_breach = 3
};

struct VerifyCheck
{
    std::string name;
    bool passed{false};
    std::string detail;
};

/// Structural checks that every solver output must satisfy.  Returns a
/// description of the first violation.
[[nodiscard]] std::optional<std::string> check_solution_invariants(const Market& market,
                                                                   const SchemeSolution& solution);

/// Runs every oracle applicable to the market size plus the scheme nesting
/// checks.  Oracle slack is 5 / grid.points relative.
[[nodiscard]] std::vector<VerifyCheck> verify_market(const Market& market, GridSpec grid);

/**
 * Entry point of the `pricediff` tool.  `args` excludes the program name.
 *
 *     solve   --scheme {cp|sp|pp} [--levels J] --input FILE [--format {table|csv|json}]
 *     compare --input FILE [--format {table|csv|json}]
 *     verify  [--input FILE] [--grid G] [--seed N] [--count M]
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pricediff

#endif // PRICEDIFF_CLI_HPP
