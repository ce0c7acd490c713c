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

// Shared fixtures and test-only reference computations.  Nothing here calls
// into the solvers; the references maximize the raw objectives directly.

#ifndef PRICEDIFF_TESTS_SUPPORT_HPP
#define PRICEDIFF_TESTS_SUPPORT_HPP

#include <pricediff/market.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace pricediff::test {

inline Market market_a()
{
    const std::vector<UserGroup> g{{4, 1}, {1, 1}};
    return validate_market(g, 1);
}

inline Market market_b()
{
    const std::vector<UserGroup> g{{10, 1}, {2, 1}};
    return validate_market(g, 2);
}

inline Market market_c()
{
    const std::vector<UserGroup> g{{16, 1}, {4, 1}, {1, 1}};
    return validate_market(g, 3);
}

inline Market with_groups(const Market& m, const std::function<UserGroup(UserGroup)>& f, double capacity)
{
    std::vector<UserGroup> g;
    for (const auto& x : m.groups()) {
        g.push_back(f(x));
    }
    return validate_market(g, capacity);
}

/// Golden-section maximization of a unimodal function on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters = 200)
{
    const double r = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    for (int i = 0; i < iters; ++i) {
        if (f(c) > f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - r * (b - a);
        d = a + r * (b - a);
    }
    return (a + b) / 2;
}

/// argmax_s theta ln(1+s) - p s over a dense grid on [0, hi].
inline double grid_best_response(double theta, double price, double hi, int points = 2000001)
{
    double best_s = 0;
    double best = 0;
    for (int t = 0; t < points; ++t) {
        const double s = hi * t / (points - 1);
        const double v = theta * std::log1p(s) - price * s;
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    return best_s;
}

/// Complete-pricing revenue in allocation form, sum N theta s/(1+s), maximized
/// over allocations with sum N s = S.  Two or three groups; the last group
/// absorbs the remainder.  Inner coordinates by golden section (the objective
/// is concave).
inline double cp_revenue_by_allocation(const Market& m)
{
    const auto rev = [&](std::size_t i, double s) {
        const auto& g = m.group(i);
        return static_cast<double>(g.count) * g.theta * s / (1 + s);
    };
    const double S = m.capacity();
    const auto n = [&](std::size_t i) { return static_cast<double>(m.group(i).count); };
    if (m.size() == 1) {
        return rev(0, S / n(0));
    }
    if (m.size() == 2) {
        auto f = [&](double s1) { return rev(0, s1) + rev(1, (S - n(0) * s1) / n(1)); };
        const double s1 = golden_max(f, 0, S / n(0));
        return f(s1);
    }
    auto inner = [&](double s1) {
        const double rest = S - n(0) * s1;
        auto g = [&](double s2) { return rev(1, s2) + rev(2, (rest - n(1) * s2) / n(2)); };
        const double s2 = golden_max(g, 0, rest / n(1));
        return rev(0, s1) + g(s2);
    };
    const double s1 = golden_max(inner, 0, S / n(0));
    return inner(s1);
}

/// Single-price revenue p * sum N (theta/p - 1)^+ maximized over a dense log
/// grid and refined by bisection on the capacity boundary.
inline double sp_revenue_by_price_scan(const Market& m, double* best_price = nullptr)
{
    auto demand = [&](double p) {
        double d = 0;
        for (const auto& g : m.groups()) {
            d += static_cast<double>(g.count) * std::max(g.theta / p - 1, 0.0);
        }
        return d;
    };
    const double hi = m.group(0).theta;
    const double lo = m.group(m.size() - 1).theta * 1e-6;
    double best = 0;
    double arg = hi;
    const int points = 200000;
    for (int t = 0; t < points; ++t) {
        const double p = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t / (points - 1));
        const double d = demand(p);
        if (d <= m.capacity() && p * d > best) {
            best = p * d;
            arg = p;
        }
    }
    // Refine: shrink toward the smallest feasible price below arg.
    double a = arg / 1.001;
    double b = arg;
    for (int i = 0; i < 200; ++i) {
        const double mid = (a + b) / 2;
        (demand(mid) <= m.capacity() ? b : a) = mid;
    }
    if (b * demand(b) > best) {
        best = b * demand(b);
        arg = b;
    }
    if (best_price != nullptr) {
        *best_price = arg;
    }
    return best;
}

/// Welfare sum N theta ln(1+s) maximized over allocations (2 or 3 groups).
inline double welfare_by_allocation(const Market& m)
{
    const double S = m.capacity();
    const auto w = [&](std::size_t i, double s) {
        const auto& g = m.group(i);
        return static_cast<double>(g.count) * g.theta * std::log1p(s);
    };
    const auto n = [&](std::size_t i) { return static_cast<double>(m.group(i).count); };
    if (m.size() == 2) {
        auto f = [&](double s1) { return w(0, s1) + w(1, (S - n(0) * s1) / n(1)); };
        return f(golden_max(f, 0, S / n(0)));
    }
    auto inner = [&](double s1) {
        const double rest = S - n(0) * s1;
        auto g = [&](double s2) { return w(1, s2) + w(2, (rest - n(1) * s2) / n(2)); };
        return w(0, s1) + g(golden_max(g, 0, rest / n(1)));
    };
    return inner(golden_max(inner, 0, S / n(0)));
}

inline double binomial(unsigned n, unsigned k)
{
    double r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace pricediff::test

#endif // PRICEDIFF_TESTS_SUPPORT_HPP
