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

#include <pricediff/oracle.hpp>

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace pricediff {

namespace {

void require_positive_capacity(const Market& market)
{
    if (!(market.capacity() > 0)) {
        throw PricingError(ErrorCode::ZeroCapacity, "oracles need positive capacity");
    }
}

double capacity_limit(const Market& market)
{
    return market.capacity() * (1.0 + feasibility_tolerance);
}

// Revenue and demand of one block (a set of groups sharing one price) at
// every grid price.  Both are non-increasing along the ascending grid.
struct BlockTable
{
    std::vector<double> revenue;
    std::vector<double> demand;
};

BlockTable tabulate(const Market& market, const std::vector<double>& grid,
                    const std::vector<std::pair<std::size_t, std::int64_t>>& members)
{
    BlockTable t;
    t.revenue.resize(grid.size());
    t.demand.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double d = 0;
        for (const auto& [i, n] : members) {
            d += static_cast<double>(n) * user_demand(market.group(i).theta, grid[g]);
        }
        t.demand[g] = d;
        t.revenue[g] = grid[g] * d;
    }
    return t;
}

/// Exhaustive search over one grid index per block.  The last block takes
/// the cheapest grid price that still fits, which is its best feasible
/// choice since its revenue and demand both fall with price.
class BlockSearch
{
public:
    BlockSearch(const std::vector<BlockTable>& tables, double limit)
        : tables_(tables), limit_(limit), current_(tables.size()), best_index_(tables.size())
    {
    }

    /// Returns false when no combination fits (cannot happen on a grid that
    /// reaches theta_1).
    bool run()
    {
        if (tables_.empty()) {
            found_ = true;
            best_revenue_ = 0;
            return true;
        }
        descend(0, 0.0, 0.0);
        return found_;
    }

    [[nodiscard]] double best_revenue() const noexcept { return best_revenue_; }
    [[nodiscard]] const std::vector<std::size_t>& best_index() const noexcept { return best_index_; }

private:
    void descend(std::size_t block, double used, double revenue)
    {
        const BlockTable& t = tables_[block];
        if (block + 1 == tables_.size()) {
            const double remaining = limit_ - used;
            auto it = std::partition_point(t.demand.begin(), t.demand.end(),
                                           [remaining](double d) { return d > remaining; });
            if (it == t.demand.end()) {
                return;
            }
            const auto g = static_cast<std::size_t>(it - t.demand.begin());
            const double total = revenue + t.revenue[g];
            if (!found_ || total > best_revenue_) {
                found_ = true;
                best_revenue_ = total;
                current_[block] = g;
                best_index_ = current_;
            }
            return;
        }
        for (std::size_t g = 0; g < t.demand.size(); ++g) {
            const double u = used + t.demand[g];
            if (u > limit_) {
                continue;
            }
            current_[block] = g;
            descend(block + 1, u, revenue + t.revenue[g]);
        }
    }

    const std::vector<BlockTable>& tables_;
    double limit_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_index_;
    double best_revenue_{0};
    bool found_{false};
};

void inject(OracleResult& result, const Market& market, const SchemeSolution* solver)
{
    result.best_revenue = result.grid_revenue;
    if (solver == nullptr) {
        return;
    }
    result.injected = check_feasibility(market, *solver);
    if (result.injected->feasible) {
        result.best_revenue = std::max(result.best_revenue, result.injected->revenue);
    }
}

} // namespace

std::vector<double> price_grid(const Market& market, GridSpec grid)
{
    if (grid.points < 2) {
        throw PricingError(ErrorCode::InvalidGrid, "grid needs at least two points");
    }
    const double hi = market.group(0).theta;
    const double lo = market.group(market.size() - 1).theta * 1e-3;
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / static_cast<double>(grid.points - 1);
    std::vector<double> prices(grid.points);
    for (std::size_t g = 0; g < grid.points; ++g) {
        prices[g] = std::exp(log_lo + step * static_cast<double>(g));
    }
    prices.front() = lo;
    prices.back() = hi;
    return prices;
}

FeasibilityCheck check_feasibility(const Market& market, const std::vector<double>& prices,
                                   const std::vector<std::int64_t>& admitted)
{
    FeasibilityCheck check;
    if (prices.size() != market.size() || admitted.size() != market.size()) {
        return check;
    }
    for (std::size_t i = 0; i < market.size(); ++i) {
        const auto& g = market.group(i);
        if (!(prices[i] > 0) || !std::isfinite(prices[i]) || admitted[i] < 0 || admitted[i] > g.count) {
            return check;
        }
        const double s = std::max(g.theta / prices[i] - 1.0, 0.0);
        check.used_capacity += static_cast<double>(admitted[i]) * s;
        check.revenue += static_cast<double>(admitted[i]) * prices[i] * s;
    }
    check.feasible = check.used_capacity <= capacity_limit(market);
    return check;
}

FeasibilityCheck check_feasibility(const Market& market, const SchemeSolution& solution)
{
    FeasibilityCheck check = check_feasibility(market, solution.prices, solution.admitted);
    if (!check.feasible) {
        return check;
    }
    if (solution.scheme == Scheme::single) {
        for (double p : solution.prices) {
            if (p != solution.prices.front()) {
                check.feasible = false;
            }
        }
    } else if (solution.scheme == Scheme::partial) {
        if (!solution.partition) {
            check.feasible = false;
            return check;
        }
        for (const auto& r : solution.partition->ranges) {
            for (std::size_t i = r.first; i < r.last && i < solution.prices.size(); ++i) {
                if (solution.prices[i] != solution.prices[r.first]) {
                    check.feasible = false;
                }
            }
        }
    }
    return check;
}

OracleResult oracle_sp(const Market& market, GridSpec grid, const SchemeSolution* solver)
{
    require_positive_capacity(market);
    const auto prices = price_grid(market, grid);

    OracleResult result;
    double best_price = prices.back();
    for (double p : prices) {
        double demand = 0;
        for (const auto& g : market.groups()) {
            demand += static_cast<double>(g.count) * user_demand(g.theta, p);
        }
        if (demand > capacity_limit(market)) {
            continue;
        }
        const double revenue = p * demand;
        if (revenue > result.grid_revenue) {
            result.grid_revenue = revenue;
            best_price = p;
        }
    }
    result.prices.assign(market.size(), best_price);
    for (const auto& g : market.groups()) {
        result.admitted.push_back(g.count);
    }
    inject(result, market, solver);
    return result;
}

std::vector<std::int64_t> admission_levels(std::int64_t count)
{
    const std::int64_t steps = std::min<std::int64_t>(count, 5);
    std::vector<std::int64_t> levels;
    for (std::int64_t t = 0; t <= steps; ++t) {
        levels.push_back(steps == 0 ? 0 : (count * t + steps / 2) / steps);
    }
    return levels;
}

OracleResult oracle_cp(const Market& market, GridSpec grid, const SchemeSolution* solver)
{
    if (market.size() > 3) {
        throw PricingError(ErrorCode::TooManyGroups, "complete pricing oracle handles at most 3 groups");
    }
    require_positive_capacity(market);
    const auto prices = price_grid(market, grid);
    const double limit = capacity_limit(market);

    std::vector<BlockTable> unit;
    for (std::size_t i = 0; i < market.size(); ++i) {
        unit.push_back(tabulate(market, prices, {{i, 1}}));
    }
    std::vector<std::vector<std::int64_t>> levels;
    for (const auto& g : market.groups()) {
        levels.push_back(admission_levels(g.count));
    }

    OracleResult result;
    bool have = false;
    std::vector<std::size_t> pick(market.size(), 0);
    for (;;) {
        std::vector<std::size_t> members;
        std::vector<BlockTable> tables;
        for (std::size_t i = 0; i < market.size(); ++i) {
            const std::int64_t n = levels[i][pick[i]];
            if (n == 0) {
                continue;
            }
            BlockTable t = unit[i];
            for (std::size_t g = 0; g < prices.size(); ++g) {
                t.revenue[g] *= static_cast<double>(n);
                t.demand[g] *= static_cast<double>(n);
            }
            members.push_back(i);
            tables.push_back(std::move(t));
        }
        BlockSearch search(tables, limit);
        if (search.run() && (!have || search.best_revenue() > result.grid_revenue)) {
            have = true;
            result.grid_revenue = search.best_revenue();
            result.prices.resize(market.size());
            result.admitted.resize(market.size());
            for (std::size_t i = 0; i < market.size(); ++i) {
                result.prices[i] = market.group(i).theta;
                result.admitted[i] = levels[i][pick[i]];
            }
            for (std::size_t b = 0; b < members.size(); ++b) {
                result.prices[members[b]] = prices[search.best_index()[b]];
            }
        }

        std::size_t i = market.size();
        while (i > 0 && pick[i - 1] + 1 == levels[i - 1].size()) {
            pick[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
    }
    inject(result, market, solver);
    return result;
}

std::vector<std::vector<std::size_t>> enumerate_set_partitions(std::size_t n, std::size_t max_blocks)
{
    std::vector<std::vector<std::size_t>> out;
    if (n == 0 || max_blocks == 0) {
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0);
    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            out.push_back(a);
            return;
        }
        const std::size_t limit = std::min(used + 1, max_blocks);
        for (std::size_t b = 0; b < limit; ++b) {
            a[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    recurse(recurse, 1, 1);
    return out;
}

OracleResult oracle_pp(const Market& market, std::size_t levels, GridSpec grid, const SchemeSolution* solver)
{
    if (market.size() > 4) {
        throw PricingError(ErrorCode::TooManyGroups, "partial pricing oracle handles at most 4 groups");
    }
    if (levels < 1 || levels > market.size()) {
        throw PricingError(ErrorCode::InvalidLevels, "levels outside 1..I");
    }
    require_positive_capacity(market);
    const auto prices = price_grid(market, grid);
    const double limit = capacity_limit(market);

    OracleResult result;
    bool have = false;
    for (const auto& labels : enumerate_set_partitions(market.size(), levels)) {
        const std::size_t blocks = *std::max_element(labels.begin(), labels.end()) + 1;
        std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> members(blocks);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            members[labels[i]].emplace_back(i, market.group(i).count);
        }
        std::vector<BlockTable> tables;
        for (const auto& m : members) {
            tables.push_back(tabulate(market, prices, m));
        }
        BlockSearch search(tables, limit);
        if (search.run() && (!have || search.best_revenue() > result.grid_revenue)) {
            have = true;
            result.grid_revenue = search.best_revenue();
            result.prices.resize(market.size());
            result.clusters.assign(blocks, {});
            for (std::size_t i = 0; i < labels.size(); ++i) {
                result.prices[i] = prices[search.best_index()[labels[i]]];
                result.clusters[labels[i]].push_back(i);
            }
        }
    }
    result.admitted.clear();
    for (const auto& g : market.groups()) {
        result.admitted.push_back(g.count);
    }
    inject(result, market, solver);
    return result;
}

} // namespace pricediff
