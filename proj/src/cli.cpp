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

#include <pricediff/cli.hpp>

#include <pricediff/analysis.hpp>
#include <pricediff/complete_pricing.hpp>
#include <pricediff/error.hpp>
#include <pricediff/partial_pricing.hpp>
#include <pricediff/report.hpp>
#include <pricediff/scenario.hpp>
#include <pricediff/single_pricing.hpp>
#include <pricediff/tolerance.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace pricediff {

namespace {

class InvariantBreach : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

void enforce_invariants(const Market& market, const SchemeSolution& sol)
{
    if (auto what = check_solution_invariants(market, sol)) {
        throw InvariantBreach(std::string(to_string(sol.scheme)) + ": " + *what);
    }
}

VerifyCheck oracle_check(std::string name, const SchemeSolution& sol, const OracleResult& oracle, double slack)
{
    VerifyCheck c;
    c.name = std::move(name);
    const bool feasible = oracle.injected && oracle.injected->feasible;
    const bool optimal = sol.revenue >= oracle.best_revenue * (1.0 - slack);
    c.passed = feasible && optimal;
    c.detail = "solver=" + format_fixed(sol.revenue) + " oracle=" + format_fixed(oracle.grid_revenue)
               + (feasible ? "" : " infeasible");
    return c;
}

VerifyCheck equality_check(std::string name, double lhs, double rhs)
{
    return {std::move(name), nearly_equal(lhs, rhs, feasibility_tolerance),
            format_fixed(lhs) + " vs " + format_fixed(rhs)};
}

SchemeSolution solve_scheme(const Market& market, const std::string& scheme, std::size_t levels)
{
    if (scheme == "cp") {
        return solve_cp(market);
    }
    if (scheme == "sp") {
        return solve_sp(market);
    }
    return solve_pp(market, levels);
}

ReportFormat format_or_table(const std::string& name)
{
    return parse_report_format(name).value_or(ReportFormat::table);
}

} // namespace

std::optional<std::string> check_solution_invariants(const Market& market, const SchemeSolution& sol)
{
    const std::size_t n = market.size();
    if (sol.prices.size() != n || sol.allocations.size() != n || sol.admitted.size() != n) {
        return "per-group vectors do not match the group count";
    }
    double used = 0;
    double revenue = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& g = market.group(i);
        if (!(sol.prices[i] > 0) || !(sol.allocations[i] >= 0)) {
            return "group " + std::to_string(i + 1) + " has a non-positive price or negative allocation";
        }
        if (sol.admitted[i] < 0 || sol.admitted[i] > g.count) {
            return "group " + std::to_string(i + 1) + " admits more users than it has";
        }
        if (std::abs(sol.allocations[i] - user_demand(g.theta, sol.prices[i])) > 1e-12 * (1.0 + sol.allocations[i])) {
            return "group " + std::to_string(i + 1) + " allocation is not the best response";
        }
        used += static_cast<double>(sol.admitted[i]) * sol.allocations[i];
        revenue += static_cast<double>(sol.admitted[i]) * sol.prices[i] * sol.allocations[i];
    }
    if (!approx_le(used, market.capacity())) {
        return "capacity exceeded";
    }
    if (!nearly_equal(revenue, sol.revenue, feasibility_tolerance)) {
        return "revenue does not match prices and allocations";
    }
    return std::nullopt;
}

std::vector<VerifyCheck> verify_market(const Market& market, GridSpec grid)
{
    std::vector<VerifyCheck> checks;
    const double slack = 5.0 / static_cast<double>(grid.points);
    const auto sp = solve_sp(market);
    const auto cp = solve_cp(market);
    std::vector<SchemeSolution> pp;
    for (std::size_t j = 1; j <= market.size(); ++j) {
        pp.push_back(solve_pp(market, j));
    }

    for (const auto* sol : {&sp, &cp}) {
        const auto what = check_solution_invariants(market, *sol);
        checks.push_back({std::string(to_string(sol->scheme)) + "_invariants", !what, what.value_or("ok")});
    }
    for (std::size_t j = 0; j < pp.size(); ++j) {
        const auto what = check_solution_invariants(market, pp[j]);
        checks.push_back({"pp" + std::to_string(j + 1) + "_invariants", !what, what.value_or("ok")});
    }

    checks.push_back(equality_check("pp1_equals_sp", pp.front().revenue, sp.revenue));
    checks.push_back(equality_check("ppI_equals_cp", pp.back().revenue, cp.revenue));
    bool monotone = true;
    bool sandwich = true;
    for (std::size_t j = 0; j < pp.size(); ++j) {
        if (j > 0 && !approx_ge(pp[j].revenue, pp[j - 1].revenue)) {
            monotone = false;
        }
        if (!approx_ge(pp[j].revenue, sp.revenue) || !approx_le(pp[j].revenue, cp.revenue)) {
            sandwich = false;
        }
    }
    checks.push_back({"revenue_curve_monotone", monotone, monotone ? "ok" : "decreasing step"});
    checks.push_back({"sp_le_pp_le_cp", sandwich, sandwich ? "ok" : "violated"});

    if (market.capacity() > 0) {
        checks.push_back(oracle_check("sp_oracle", sp, oracle_sp(market, grid, &sp), slack));
        if (market.size() <= 3) {
            checks.push_back(oracle_check("cp_oracle", cp, oracle_cp(market, grid, &cp), slack));
        }
        if (market.size() <= 4) {
            for (std::size_t j = 1; j <= std::min<std::size_t>(market.size(), 3); ++j) {
                checks.push_back(oracle_check("pp" + std::to_string(j) + "_oracle", pp[j - 1],
                                              oracle_pp(market, j, grid, &pp[j - 1]), slack));
            }
        }
    }
    return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Revenue-maximizing usage-based pricing for a capacity-limited link", "pricediff"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "table";
    const std::vector<std::string> formats{"table", "csv", "json"};

    auto* solve = app.add_subcommand("solve", "Solve one pricing scheme");
    std::string scheme;
    std::size_t levels = 0;
    solve->add_option("--scheme", scheme, "Pricing scheme")->required()->check(CLI::IsMember({"cp", "sp", "pp"}));
    auto* levels_opt = solve->add_option("--levels", levels, "Number of price levels (pp only, default 2)");
    solve->add_option("--input", input, "Scenario file")->required();
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    auto* compare = app.add_subcommand("compare", "Compare all schemes");
    compare->add_option("--input", input, "Scenario file")->required();
    compare->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Check solvers against brute-force oracles");
    std::size_t grid_points = 400;
    std::uint64_t seed = 0;
    std::size_t count = 5;
    verify->add_option("--input", input, "Scenario file");
    verify->add_option("--grid", grid_points, "Oracle grid resolution")->check(CLI::Range(2, 1000000));
    auto* seed_opt = verify->add_option("--seed", seed, "Seed for additional random markets");
    verify->add_option("--count", count, "Number of random markets (with --seed)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (solve->parsed()) {
            const Scenario sc = load_scenario(input);
            const Market market = sc.market();
            if (scheme != "pp" && levels_opt->count() > 0) {
                throw PricingError(ErrorCode::InvalidLevels, "--levels applies to --scheme pp only");
            }
            if (scheme == "pp" && levels_opt->count() == 0) {
                levels = std::min<std::size_t>(2, market.size());
            }
            const auto sol = solve_scheme(market, scheme, levels);
            enforce_invariants(market, sol);
            out << render_solution(market, sol, format_or_table(format), sc.label);
            return exit_ok;
        }
        if (compare->parsed()) {
            const Scenario sc = load_scenario(input);
            const Market market = sc.market();
            const auto report = compare_schemes(market);
            out << render_comparison(market, report, format_or_table(format), sc.label);
            return exit_ok;
        }

        // verify
        if (input.empty() && seed_opt->count() == 0) {
            throw PricingError(ErrorCode::ParseError, "verify needs --input, --seed, or both");
        }
        std::vector<std::pair<std::string, Market>> markets;
        if (!input.empty()) {
            const Scenario sc = load_scenario(input);
            markets.emplace_back(sc.label.empty() ? input : sc.label, sc.market());
        }
        if (seed_opt->count() > 0) {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::size_t> size(1, 4);
            for (std::size_t m = 0; m < count; ++m) {
                const std::size_t groups = size(rng);
                markets.emplace_back("random-" + std::to_string(m + 1), random_market(rng, groups));
            }
        }

        out << "verify grid=" << grid_points << " seed=" << (seed_opt->count() > 0 ? std::to_string(seed) : "none")
            << '\n';
        std::size_t passed = 0;
        std::size_t failed = 0;
        for (const auto& [name, market] : markets) {
            out << "market " << name << " groups=" << market.size() << " capacity=" << format_fixed(market.capacity())
                << '\n';
            for (const auto& c : verify_market(market, GridSpec{grid_points})) {
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.detail << '\n';
                (c.passed ? passed : failed) += 1;
            }
        }
        out << "summary: " << passed << " passed, " << failed << " failed\n";
        return failed == 0 ? exit_ok : exit_verification_failed;
    } catch (const PricingError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const InvariantBreach& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_invariant_breach;
    }
}

} // namespace pricediff
