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
#include <pricediff/cli.hpp>
#include <pricediff/complete_pricing.hpp>
#include <pricediff/error.hpp>
#include <pricediff/oracle.hpp>
#include <pricediff/partial_pricing.hpp>
#include <pricediff/scenario.hpp>
#include <pricediff/single_pricing.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace pricediff;

namespace {

Market make_market(const std::vector<std::pair<double, std::int64_t>>& groups, double capacity)
{
    std::vector<UserGroup> raw;
    raw.reserve(groups.size());
    for (const auto& [theta, count] : groups) {
        raw.push_back({theta, count});
    }
    return validate_market(raw, capacity);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Revenue-maximizing usage-based pricing for a capacity-limited link";

    py::register_exception<PricingError>(m, "PricingError", PyExc_ValueError);

    py::class_<UserGroup>(m, "UserGroup")
        .def(py::init<>())
        .def(py::init([](double theta, std::int64_t count) { return UserGroup{theta, count}; }), "theta"_a,
             "count"_a)
        .def_readwrite("theta", &UserGroup::theta)
        .def_readwrite("count", &UserGroup::count)
        .def("__repr__", [](const UserGroup& g) {
            return "UserGroup(theta=" + std::to_string(g.theta) + ", count=" + std::to_string(g.count) + ")";
        });

    py::class_<Market>(m, "Market")
        .def_property_readonly("groups",
                               [](const Market& mk) { return std::vector<UserGroup>(mk.groups().begin(), mk.groups().end()); })
        .def_property_readonly("capacity", &Market::capacity)
        .def("__len__", &Market::size);

    m.def("market", &make_market, "groups"_a, "capacity"_a,
          "Validate (theta, count) pairs and a capacity into a Market.");

    py::class_<ClusterRange>(m, "ClusterRange")
        .def_readonly("first", &ClusterRange::first)
        .def_readonly("last", &ClusterRange::last);

    py::class_<Partition>(m, "Partition")
        .def_readonly("ranges", &Partition::ranges)
        .def_readonly("effective_counts", &Partition::effective_counts)
        .def_readonly("cluster_prices", &Partition::cluster_prices);

    py::class_<SchemeSolution>(m, "SchemeSolution")
        .def_property_readonly("scheme", [](const SchemeSolution& s) { return std::string(to_string(s.scheme)); })
        .def_readonly("prices", &SchemeSolution::prices)
        .def_readonly("allocations", &SchemeSolution::allocations)
        .def_readonly("admitted", &SchemeSolution::admitted)
        .def_readonly("shadow_price", &SchemeSolution::shadow_price)
        .def_readonly("effective_threshold", &SchemeSolution::effective_threshold)
        .def_readonly("revenue", &SchemeSolution::revenue)
        .def_readonly("partition", &SchemeSolution::partition);

    py::class_<SpCandidate>(m, "SpCandidate")
        .def_readonly("k", &SpCandidate::k)
        .def_readonly("price", &SpCandidate::price)
        .def_readonly("demand", &SpCandidate::demand)
        .def_readonly("revenue", &SpCandidate::revenue)
        .def_readonly("feasible", &SpCandidate::feasible);

    py::class_<WelfareOptimum>(m, "WelfareOptimum")
        .def_readonly("allocations", &WelfareOptimum::allocations)
        .def_readonly("welfare", &WelfareOptimum::welfare)
        .def_readonly("shadow_price", &WelfareOptimum::shadow_price)
        .def_readonly("effective_threshold", &WelfareOptimum::effective_threshold);

    py::class_<SchemeFigures>(m, "SchemeFigures")
        .def_readonly("revenue", &SchemeFigures::revenue)
        .def_readonly("effective_market_size", &SchemeFigures::effective_market_size)
        .def_readonly("welfare", &SchemeFigures::welfare);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("revenues", &ComparisonReport::revenues)
        .def_readonly("differentiation_gain", &ComparisonReport::differentiation_gain)
        .def_readonly("single", &ComparisonReport::single)
        .def_readonly("complete", &ComparisonReport::complete)
        .def_readonly("partial", &ComparisonReport::partial)
        .def_readonly("welfare", &ComparisonReport::welfare);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("grid_revenue", &OracleResult::grid_revenue)
        .def_readonly("best_revenue", &OracleResult::best_revenue)
        .def_readonly("prices", &OracleResult::prices)
        .def_readonly("admitted", &OracleResult::admitted)
        .def_readonly("clusters", &OracleResult::clusters)
        .def_property_readonly("injected_feasible", [](const OracleResult& r) -> py::object {
            if (!r.injected) {
                return py::none();
            }
            return py::bool_(r.injected->feasible);
        });

    m.def("user_demand", &user_demand, "theta"_a, "price"_a);
    m.def("user_surplus", &user_surplus, "theta"_a, "price"_a, "allocation"_a);
    m.def(
        "total_demand",
        [](const Market& mk, std::vector<double> prices) { return total_demand(mk, PriceSchedule(std::move(prices))); },
        "market"_a, "prices"_a);

    m.def("cp_multiplier", &cp_multiplier, "market"_a, "k"_a);
    m.def("cp_threshold", &cp_threshold, "market"_a);
    m.def("solve_cp", &solve_cp, "market"_a);
    m.def("sp_candidate", &sp_candidate, "market"_a, "k"_a);
    m.def("solve_sp", &solve_sp, "market"_a);
    m.def("solve_pp", &solve_pp, "market"_a, "levels"_a);
    m.def("enumerate_consecutive_partitions", &enumerate_consecutive_partitions, "groups"_a, "levels"_a);

    m.def("differentiation_gain", &differentiation_gain, "market"_a);
    m.def("revenue_curve", &revenue_curve, "market"_a);
    m.def("effective_market_size", &effective_market_size, "market"_a, "solution"_a);
    m.def("welfare_optimum", &welfare_optimum, "market"_a);
    m.def("welfare_of", &welfare_of, "market"_a, "solution"_a);
    m.def("compare_schemes", &compare_schemes, "market"_a);

    m.def(
        "oracle_sp",
        [](const Market& mk, std::size_t points, const SchemeSolution* solver) {
            return oracle_sp(mk, GridSpec{points}, solver);
        },
        "market"_a, "points"_a = 10000, "solver"_a = nullptr);
    m.def(
        "oracle_cp",
        [](const Market& mk, std::size_t points, const SchemeSolution* solver) {
            return oracle_cp(mk, GridSpec{points}, solver);
        },
        "market"_a, "points"_a = 400, "solver"_a = nullptr);
    m.def(
        "oracle_pp",
        [](const Market& mk, std::size_t levels, std::size_t points, const SchemeSolution* solver) {
            return oracle_pp(mk, levels, GridSpec{points}, solver);
        },
        "market"_a, "levels"_a, "points"_a = 400, "solver"_a = nullptr);

    m.def(
        "parse_scenario",
        [](const std::string& text) {
            const Scenario sc = parse_scenario(text);
            return py::make_tuple(sc.market(), sc.label);
        },
        "text"_a, "Parse scenario JSON text into (Market, label).");
    m.def(
        "load_scenario",
        [](const std::string& path) {
            const Scenario sc = load_scenario(path);
            return py::make_tuple(sc.market(), sc.label);
        },
        "path"_a);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        "args"_a, "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
