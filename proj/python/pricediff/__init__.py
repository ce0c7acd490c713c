# Copyright 2026 The pricediff Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Revenue-maximizing usage-based pricing for a capacity-limited link."""

from ._core import (
    ClusterRange,
    ComparisonReport,
    Market,
    OracleResult,
    Partition,
    PricingError,
    SchemeFigures,
    SchemeSolution,
    SpCandidate,
    UserGroup,
    WelfareOptimum,
    compare_schemes,
    cp_multiplier,
    cp_threshold,
    differentiation_gain,
    effective_market_size,
    enumerate_consecutive_partitions,
    load_scenario,
    market,
    oracle_cp,
    oracle_pp,
    oracle_sp,
    parse_scenario,
    revenue_curve,
    run_cli,
    solve_cp,
    solve_pp,
    solve_sp,
    sp_candidate,
    total_demand,
    user_demand,
    user_surplus,
    welfare_of,
    welfare_optimum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
