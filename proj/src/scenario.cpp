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

#include <pricediff/scenario.hpp>

#include <pricediff/error.hpp>
#include <pricediff/tolerance.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace pricediff {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what)
{
    throw PricingError(ErrorCode::ParseError, what);
}

double number_field(const json& obj, const char* key, const std::string& where)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where + ": missing field '" + key + "'");
    }
    if (!it->is_number()) {
        fail(where + "." + key + ": expected a number");
    }
    return it->get<double>();
}

double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

} // namespace

Scenario parse_scenario(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    if (!doc.is_object()) {
        fail("scenario: expected a JSON object at top level");
    }

    Scenario sc;
    sc.capacity = number_field(doc, "capacity", "scenario");
    if (const auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) {
            fail("scenario.label: expected a string");
        }
        sc.label = it->get<std::string>();
    }

    const auto groups = doc.find("groups");
    if (groups == doc.end() || !groups->is_array()) {
        fail("scenario.groups: expected an array");
    }
    for (std::size_t i = 0; i < groups->size(); ++i) {
        const json& g = (*groups)[i];
        const std::string where = "groups[" + std::to_string(i) + "]";
        if (!g.is_object()) {
            fail(where + ": expected an object");
        }
        UserGroup ug;
        ug.theta = number_field(g, "theta", where);
        const auto count = g.find("count");
        if (count == g.end()) {
            fail(where + ": missing field 'count'");
        }
        if (!count->is_number_integer()) {
            fail(where + ".count: expected an integer");
        }
        ug.count = count->get<std::int64_t>();
        sc.groups.push_back(ug);
    }

    // Surface validation errors now; the market itself is rebuilt on demand.
    (void)sc.market();
    return sc;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

Market random_market(std::mt19937_64& rng, std::size_t groups)
{
    std::vector<UserGroup> raw;
    std::uniform_int_distribution<std::int64_t> count(1, 100);
    while (raw.size() < groups) {
        const double theta = log_uniform(rng, 0.1, 100.0);
        bool clash = false;
        for (const auto& g : raw) {
            clash = clash || std::abs(g.theta - theta) <= tie_tolerance * std::max(g.theta, theta);
        }
        if (!clash) {
            raw.push_back({theta, count(rng)});
        }
    }
    return validate_market(raw, log_uniform(rng, 0.1, 100.0));
}

} // namespace pricediff
