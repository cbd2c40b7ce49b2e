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

#include "landclaim/aggregate/comparison.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace landclaim::aggregate {

WindTotals wind_by_country(double spacing_m,
                           std::span<const placement::PlacementResult> results,
                           const std::map<std::string, std::string>& country_of) {
  WindTotals totals;
  totals.spacing_m = spacing_m;
  for (const auto& r : results) {
    auto it = country_of.find(r.course_id);
    const std::string code = it == country_of.end() ? std::string(kUnassigned) : it->second;
    totals.mw_by_country[code] += r.capacity_mw;
  }
  return totals;
}

std::string pv_scenario_label(double coverage) {
  return fmt::format("coverage_{:g}", coverage);
}

std::string wind_scenario_label(double spacing_m) {
  return fmt::format("spacing_{:g}m", spacing_m);
}

std::string aggregate_label(const ComparisonOptions& options, bool with_exclusions) {
  std::string label = fmt::format("TOP{}", options.top_n);
  if (with_exclusions) {
    for (const auto& code : options.exclude) label += "_EXCL_" + code;
  }
  return label;
}

namespace {

struct Accumulator {
  double potential = 0.0;
  std::optional<double> installed = 0.0;
  std::optional<double> projected = 0.0;

  void add(const PotentialComparison& row) {
    potential += row.potential_mw;
    installed = (installed && row.installed_2023_mw)
                    ? std::optional(*installed + *row.installed_2023_mw)
                    : std::nullopt;
    projected = (projected && row.projected_2028_mw)
                    ? std::optional(*projected + *row.projected_2028_mw)
                    : std::nullopt;
  }
};

std::optional<bool> meets(double potential, const std::optional<double>& projected) {
  if (!projected) return std::nullopt;
  return potential >= *projected;
}

}  // namespace

std::vector<PotentialComparison> scenario_comparison(
    const StatsReport& stats, std::span<const WindTotals> wind,
    const capacity::PVConfig& pv, const ReferenceTable& reference,
    const ComparisonOptions& options) {
  const std::size_t n = std::min(options.top_n, stats.countries.size());
  const std::set<std::string> excluded(options.exclude.begin(), options.exclude.end());

  std::vector<const WindTotals*> wind_sorted;
  for (const auto& w : wind) wind_sorted.push_back(&w);
  std::sort(wind_sorted.begin(), wind_sorted.end(),
            [](const WindTotals* a, const WindTotals* b) { return a->spacing_m > b->spacing_m; });

  std::vector<PotentialComparison> rows;
  auto make_row = [&](const std::string& iso3, Technology tech, std::string scenario,
                      double potential) {
    PotentialComparison row;
    row.iso3 = iso3;
    row.technology = tech;
    row.scenario = std::move(scenario);
    row.potential_mw = potential;
    row.installed_2023_mw = reference.capacity_mw(iso3, tech, 2023);
    row.projected_2028_mw = reference.capacity_mw(iso3, tech, 2028);
    row.meets_2028 = meets(potential, row.projected_2028_mw);
    return row;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const CountryStats& c = stats.countries[i];
    for (const auto& [coverage, mw] : capacity::pv_scenarios(c.total_area_km2, pv)) {
      rows.push_back(make_row(c.iso3, Technology::pv_utility, pv_scenario_label(coverage), mw));
    }
    for (const WindTotals* w : wind_sorted) {
      auto it = w->mw_by_country.find(c.iso3);
      const double mw = it == w->mw_by_country.end() ? 0.0 : it->second;
      rows.push_back(
          make_row(c.iso3, Technology::wind_onshore, wind_scenario_label(w->spacing_m), mw));
    }
  }

  // Aggregates keyed by (technology, scenario) in first-seen order.
  const std::size_t per_country_rows = rows.size();
  for (bool with_exclusions : {false, true}) {
    if (with_exclusions && excluded.empty()) continue;
    std::vector<std::pair<PotentialComparison, Accumulator>> groups;
    for (std::size_t r = 0; r < per_country_rows; ++r) {
      const auto& row = rows[r];
      if (with_exclusions && excluded.count(row.iso3)) continue;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
        return g.first.technology == row.technology && g.first.scenario == row.scenario;
      });
      if (it == groups.end()) {
        PotentialComparison key;
        key.iso3 = aggregate_label(options, with_exclusions);
        key.technology = row.technology;
        key.scenario = row.scenario;
        groups.emplace_back(key, Accumulator{});
        it = std::prev(groups.end());
      }
      it->second.add(row);
    }
    for (auto& [row, acc] : groups) {
      row.potential_mw = acc.potential;
      row.installed_2023_mw = acc.installed;
      row.projected_2028_mw = acc.projected;
      row.meets_2028 = meets(acc.potential, acc.projected);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<EquivalenceRow> equivalence_table(const StatsReport& stats,
                                              const ReferenceTable& reference,
                                              double pv_km2_per_mw, std::size_t top_n) {
  std::vector<EquivalenceRow> out;
  const std::size_t n = std::min(top_n, stats.countries.size());
  for (std::size_t i = 0; i < n; ++i) {
    const CountryStats& c = stats.countries[i];
    EquivalenceRow row;
    row.iso3 = c.iso3;
    row.golf_area_km2 = c.total_area_km2;
    row.installed_pv_2023_mw = reference.capacity_mw(c.iso3, Technology::pv_utility, 2023);
    if (row.installed_pv_2023_mw) {
      row.equivalent_pv_area_km2 =
          capacity::equivalent_pv_area_km2(*row.installed_pv_2023_mw, pv_km2_per_mw);
      if (*row.installed_pv_2023_mw > 0.0) {
        row.golf_to_pv_ratio = capacity::golf_to_pv_ratio(
            c.total_area_km2, *row.installed_pv_2023_mw, pv_km2_per_mw);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace landclaim::aggregate
