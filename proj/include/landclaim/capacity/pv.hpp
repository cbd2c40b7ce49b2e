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

#include <utility>
#include <vector>

namespace landclaim::capacity {

/// Utility-scale PV assumptions: 79.2 MW/km² on 25/50/75 % of course area.
struct PVConfig {
  double density_mw_per_km2 = 79.2;
  std::vector<double> coverages{0.25, 0.50, 0.75};

  void validate() const;
};

/// Land attributed per MW of installed capacity.
struct EquivalenceFactors {
  double pv_km2_per_mw = 0.01;
  double wind_km2_per_mw = 0.12;
  double pv_comparison_km2_per_mw = 0.015;

  void validate() const;
};

/// area × density × coverage. Throws ValidationError when coverage is
/// outside (0, 1], area is negative, or density is not positive.
double pv_capacity_mw(double area_km2, double coverage, double density_mw_per_km2);

/// (coverage, MW) for each configured coverage, ascending by coverage.
std::vector<std::pair<double, double>> pv_scenarios(double total_area_km2,
                                                    const PVConfig& config);

double equivalent_pv_area_km2(double installed_mw, double factor_km2_per_mw);

/// golf_area / (installed × factor). Throws ValidationError when
/// installed_pv_mw is zero.
double golf_to_pv_ratio(double golf_area_km2, double installed_pv_mw,
                        double factor_km2_per_mw);

}  // namespace landclaim::capacity
