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

#include <pricediff/report.hpp>

#include <pricediff/tolerance.hpp>

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace pricediff {

namespace {

std::string quoted(std::string_view text)
{
    return nlohmann::json(std::string(text)).dump();
}

std::int64_t served_users(const SchemeSolution& sol, std::size_t i)
{
    return sol.allocations[i] > feasibility_tolerance ? sol.admitted[i] : 0;
}

std::size_t price_level(const SchemeSolution& sol, std::size_t i)
{
    switch (sol.scheme) {
    case Scheme::complete: return i + 1;
    case Scheme::single: return 1;
    case Scheme::partial: return sol.partition->cluster_of(i) + 1;
    }
    return 0;
}

double ratio(double num, double den)
{
    return den > 0 ? num / den : 1.0;
}

struct SchemeRow
{
    std::string name;
    SchemeFigures figures;
};

std::vector<SchemeRow> scheme_rows(const ComparisonReport& report)
{
    std::vector<SchemeRow> rows{{"sp", report.single}, {"cp", report.complete}};
    for (std::size_t j = 0; j < report.partial.size(); ++j) {
        rows.push_back({"pp" + std::to_string(j + 1), report.partial[j]});
    }
    return rows;
}

} // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name)
{
    if (name == "table") {
        return ReportFormat::table;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    return std::nullopt;
}

std::string format_fixed(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    if (s == "-0.000000") {
        s.erase(0, 1);
    }
    return s;
}

std::string render_solution(const Market& market, const SchemeSolution& sol, ReportFormat format,
                            std::string_view label)
{
    std::ostringstream out;
    const auto scheme = to_string(sol.scheme);
    switch (format) {
    case ReportFormat::table: {
        if (!label.empty()) {
            out << "scenario: " << label << '\n';
        }
        out << "scheme: " << scheme << '\n';
        if (sol.partition) {
            out << "levels: " << sol.partition->levels() << '\n';
        }
        char line[256];
        std::snprintf(line, sizeof line, "%6s %14s %8s %14s %14s %8s %8s\n", "group", "theta", "count", "price",
                      "allocation", "served", "cluster");
        out << line;
        for (std::size_t i = 0; i < market.size(); ++i) {
            const auto& g = market.group(i);
            std::snprintf(line, sizeof line, "%6zu %14s %8lld %14s %14s %8lld %8zu\n", i + 1,
                          format_fixed(g.theta).c_str(), static_cast<long long>(g.count),
                          format_fixed(sol.prices[i]).c_str(), format_fixed(sol.allocations[i]).c_str(),
                          static_cast<long long>(served_users(sol, i)), price_level(sol, i));
            out << line;
        }
        out << "revenue: " << format_fixed(sol.revenue) << '\n';
        out << "shadow_price: " << format_fixed(sol.shadow_price) << '\n';
        out << "effective_threshold: " << sol.effective_threshold << '\n';
        break;
    }
    case ReportFormat::csv: {
        out << "group_index,theta,count,price,allocation_per_user,served,cluster\n";
        for (std::size_t i = 0; i < market.size(); ++i) {
            const auto& g = market.group(i);
            out << i + 1 << ',' << format_fixed(g.theta) << ',' << g.count << ',' << format_fixed(sol.prices[i])
                << ',' << format_fixed(sol.allocations[i]) << ',' << served_users(sol, i) << ','
                << price_level(sol, i) << '\n';
        }
        out << "\nmetric,value\n";
        out << "scheme," << scheme << '\n';
        if (sol.partition) {
            out << "levels," << sol.partition->levels() << '\n';
        }
        out << "revenue," << format_fixed(sol.revenue) << '\n';
        out << "shadow_price," << format_fixed(sol.shadow_price) << '\n';
        out << "effective_threshold," << sol.effective_threshold << '\n';
        break;
    }
    case ReportFormat::json: {
        out << "{\n";
        if (!label.empty()) {
            out << "  \"label\": " << quoted(label) << ",\n";
        }
        out << "  \"scheme\": " << quoted(scheme) << ",\n";
        if (sol.partition) {
            out << "  \"levels\": " << sol.partition->levels() << ",\n";
        }
        out << "  \"revenue\": " << format_fixed(sol.revenue) << ",\n";
        out << "  \"shadow_price\": " << format_fixed(sol.shadow_price) << ",\n";
        out << "  \"effective_threshold\": " << sol.effective_threshold << ",\n";
        out << "  \"groups\": [\n";
        for (std::size_t i = 0; i < market.size(); ++i) {
            const auto& g = market.group(i);
            out << "    {\"group_index\": " << i + 1 << ", \"theta\": " << format_fixed(g.theta)
                << ", \"count\": " << g.count << ", \"price\": " << format_fixed(sol.prices[i])
                << ", \"allocation_per_user\": " << format_fixed(sol.allocations[i])
                << ", \"served\": " << served_users(sol, i) << ", \"cluster\": " << price_level(sol, i) << '}'
                << (i + 1 < market.size() ? "," : "") << '\n';
        }
        out << "  ]\n}\n";
        break;
    }
    }
    return out.str();
}

std::string render_comparison(const Market& market, const ComparisonReport& report, ReportFormat format,
                              std::string_view label)
{
    std::ostringstream out;
    const auto rows = scheme_rows(report);
    const double base = report.revenues.front();
    switch (format) {
    case ReportFormat::table: {
        char line[256];
        if (!label.empty()) {
            out << "scenario: " << label << '\n';
        }
        out << "groups: " << market.size() << "  capacity: " << format_fixed(market.capacity()) << '\n';
        std::snprintf(line, sizeof line, "%6s %14s %12s\n", "levels", "revenue", "gain_vs_sp");
        out << line;
        for (std::size_t j = 0; j < report.revenues.size(); ++j) {
            std::snprintf(line, sizeof line, "%6zu %14s %12s\n", j + 1, format_fixed(report.revenues[j]).c_str(),
                          format_fixed(ratio(report.revenues[j], base)).c_str());
            out << line;
        }
        out << "differentiation_gain: " << format_fixed(report.differentiation_gain) << '\n';
        std::snprintf(line, sizeof line, "%6s %14s %12s %14s\n", "scheme", "revenue", "served_users", "welfare");
        out << line;
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%6s %14s %12lld %14s\n", r.name.c_str(),
                          format_fixed(r.figures.revenue).c_str(),
                          static_cast<long long>(r.figures.effective_market_size),
                          format_fixed(r.figures.welfare).c_str());
            out << line;
        }
        out << "welfare_optimal: " << format_fixed(report.welfare.welfare) << '\n';
        out << "welfare_shadow_price: " << format_fixed(report.welfare.shadow_price) << '\n';
        break;
    }
    case ReportFormat::csv: {
        out << "levels,revenue,gain_vs_sp\n";
        for (std::size_t j = 0; j < report.revenues.size(); ++j) {
            out << j + 1 << ',' << format_fixed(report.revenues[j]) << ','
                << format_fixed(ratio(report.revenues[j], base)) << '\n';
        }
        out << "\nscheme,revenue,effective_market_size,welfare\n";
        for (const auto& r : rows) {
            out << r.name << ',' << format_fixed(r.figures.revenue) << ',' << r.figures.effective_market_size << ','
                << format_fixed(r.figures.welfare) << '\n';
        }
        out << "\nmetric,value\n";
        out << "differentiation_gain," << format_fixed(report.differentiation_gain) << '\n';
        out << "welfare_optimal," << format_fixed(report.welfare.welfare) << '\n';
        out << "welfare_shadow_price," << format_fixed(report.welfare.shadow_price) << '\n';
        break;
    }
    case ReportFormat::json: {
        out << "{\n";
        if (!label.empty()) {
            out << "  \"label\": " << quoted(label) << ",\n";
        }
        out << "  \"revenue_curve\": [\n";
        for (std::size_t j = 0; j < report.revenues.size(); ++j) {
            out << "    {\"levels\": " << j + 1 << ", \"revenue\": " << format_fixed(report.revenues[j])
                << ", \"gain_vs_sp\": " << format_fixed(ratio(report.revenues[j], base)) << '}'
                << (j + 1 < report.revenues.size() ? "," : "") << '\n';
        }
        out << "  ],\n";
        out << "  \"differentiation_gain\": " << format_fixed(report.differentiation_gain) << ",\n";
        out << "  \"schemes\": [\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << "    {\"scheme\": " << quoted(rows[r].name) << ", \"revenue\": "
                << format_fixed(rows[r].figures.revenue)
                << ", \"effective_market_size\": " << rows[r].figures.effective_market_size
                << ", \"welfare\": " << format_fixed(rows[r].figures.welfare) << '}'
                << (r + 1 < rows.size() ? "," : "") << '\n';
        }
        out << "  ],\n";
        out << "  \"welfare_optimal\": " << format_fixed(report.welfare.welfare) << ",\n";
        out << "  \"welfare_shadow_price\": " << format_fixed(report.welfare.shadow_price) << "\n";
        out << "}\n";
        break;
    }
    }
    return out.str();
}

} // namespace pricediff
