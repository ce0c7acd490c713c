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

#include <pricediff/analysis.hpp>

#include <pricediff/complete_pricing.hpp>
#include <pricediff/partial_pricing.hpp>
#include <pricediff/single_pricing.hpp>
#include <pricediff/tolerance.hpp>

#include <cmath>

namespace pricediff {

namespace {

double gain(double complete, double single)
{
    if (single <= 0) {
        return 1.0;
    }
    return complete / single;
}

SchemeFigures figures(const Market& market, const SchemeSolution& sol)
{
    return {sol.revenue, effective_market_size(market, sol), welfare_of(market, sol)};
}

} // namespace

double differentiation_gain(const Market& market)
{
    return gain(solve_cp(market).revenue, solve_sp(market).revenue);
}

std::vector<double> revenue_curve(const Market& market)
{
    std::vector<double> curve;
    curve.reserve(market.size());
    for (std::size_t j = 1; j <= market.size(); ++j) {
        curve.push_back(solve_pp(market, j).revenue);
    }
    return curve;
}

std::int64_t effective_market_size(const Market& market, const SchemeSolution& solution)
{
    std::int64_t users = 0;
    for (std::size_t i = 0; i < market.size() && i < solution.allocations.size(); ++i) {
        if (solution.allocations[i] > feasibility_tolerance) {
            users += market.group(i).count;
        }
    }
    return users;
}

WelfareOptimum welfare_optimum(const Market& market)
{
    WelfareOptimum opt;
    opt.allocations.assign(market.size(), 0.0);
    if (!(market.capacity() > 0)) {
        opt.shadow_price = market.group(0).theta;
        return opt;
    }

    double a = 0;
    double b = 0;
    double mu = 0;
    std::size_t served = 1;
    for (std::size_t k = 1; k <= market.size(); ++k) {
        const auto& g = market.group(k - 1);
        const double a_k = a + static_cast<double>(g.count) * g.theta;
        const double b_k = b + static_cast<double>(g.count);
        const double mu_k = a_k / (market.capacity() + b_k);
        if (k > 1 && !clearly_less(mu_k, g.theta)) {
            break;
        }
        a = a_k;
        b = b_k;
        mu = mu_k;
        served = k;
        if (approx_ge(mu_k, market.theta_or_zero(k))) {
            break;
        }
    }

    opt.shadow_price = mu;
    opt.effective_threshold = served;
    for (std::size_t i = 0; i < served; ++i) {
        const auto& g = market.group(i);
        opt.allocations[i] = std::max(g.theta / mu - 1.0, 0.0);
        opt.welfare += static_cast<double>(g.count) * g.theta * std::log1p(opt.allocations[i]);
    }
    return opt;
}

double welfare_of(const Market& market, const SchemeSolution& solution)
{
    double w = 0;
    for (std::size_t i = 0; i < market.size() && i < solution.allocations.size(); ++i) {
        const auto& g = market.group(i);
        w += static_cast<double>(solution.admitted[i]) * g.theta * std::log1p(solution.allocations[i]);
    }
    return w;
}

ComparisonReport compare_schemes(const Market& market)
{
    ComparisonReport report;
    const auto sp = solve_sp(market);
    const auto cp = solve_cp(market);
    report.single = figures(market, sp);
    report.complete = figures(market, cp);
    for (std::size_t j = 1; j <= market.size(); ++j) {
        const auto pp = solve_pp(market, j);
        report.revenues.push_back(pp.revenue);
        report.partial.push_back(figures(market, pp));
    }
    report.differentiation_gain = gain(report.revenues.back(), report.revenues.front());
    report.welfare = welfare_optimum(market);
    return report;
}

} // namespace pricediff
