// Copyright 2026 The landclaim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landclaim/aggregate/reference.hpp"
#include "landclaim/aggregate/stats.hpp"
#include "landclaim/capacity/pv.hpp"
#include "landclaim/placement/placement.hpp"

namespace landclaim::aggregate {

/// Wind capacity per country for one spacing scenario.
struct WindTotals {
  double spacing_m = 0.0;
  std::map<std::string, double> mw_by_country;
};

/// Sums placement capacity by the country assigned to each course_id.
/// Courses missing from `country_of` count as unassigned.
WindTotals wind_by_country(double spacing_m,
                           std::span<const placement::PlacementResult> results,
                           const std::map<std::string, std::string>& country_of);

struct PotentialComparison {
  std::string iso3;  // country code or an aggregate label such as TOP10
  Technology technology = Technology::pv_utility;
  std::string scenario;
  double potential_mw = 0.0;
  std::optional<double> installed_2023_mw;  // empty when no reference row
  std::optional<double> projected_2028_mw;
  std::optional<bool> meets_2028;           // potential >= projected
};

struct ComparisonOptions {
  std::size_t top_n = 10;
  /// Countries left out of the second aggregate row.
  std::vector<std::string> exclude{"CHN"};
};

std::string pv_scenario_label(double coverage);
std::string wind_scenario_label(double spacing_m);
std::string aggregate_label(const ComparisonOptions& options, bool with_exclusions);

/// Per top-n country (by course count): one row per PV coverage, then one
/// per wind spacing (widest first). Then aggregate rows over the top n and
/// over the top n minus `exclude`. Aggregate reference sums are empty if any
/// member lacks a row.
std::vector<PotentialComparison> scenario_comparison(
    const StatsReport& stats, std::span<const WindTotals> wind,
    const capacity::PVConfig& pv, const ReferenceTable& reference,
    const ComparisonOptions& options);

struct EquivalenceRow {
  std::string iso3;
  double golf_area_km2 = 0.0;
  std::optional<double> installed_pv_2023_mw;
  std::optional<double> equivalent_pv_area_km2;
  std::optional<double> golf_to_pv_ratio;
};

/// Golf area versus land under installed utility PV for the top-n countries.
std::vector<EquivalenceRow> equivalence_table(const StatsReport& stats,
                                              const ReferenceTable& reference,
                                              double pv_km2_per_mw,
                                              std::size_t top_n);

}  // namespace landclaim::aggregate
