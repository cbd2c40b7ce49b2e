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

#include "landclaim/capacity/pv.hpp"

#include <algorithm>
#include <cmath>

#include "landclaim/error.hpp"

namespace landclaim::capacity {
namespace {

void check_coverage(double c) {
  if (!(c > 0.0 && c <= 1.0)) {
    throw ValidationError("coverage must lie in (0, 1], got " + std::to_string(c));
  }
}

}  // namespace

void PVConfig::validate() const {
  if (!(density_mw_per_km2 > 0.0)) throw ValidationError("PV density must be positive");
  if (coverages.empty()) throw ValidationError("at least one PV coverage is required");
  for (double c : coverages) check_coverage(c);
}

void EquivalenceFactors::validate() const {
  if (!(pv_km2_per_mw > 0.0) || !(wind_km2_per_mw > 0.0) ||
      !(pv_comparison_km2_per_mw > 0.0)) {
    throw ValidationError("land-use factors must be positive");
  }
}

double pv_capacity_mw(double area_km2, double coverage, double density_mw_per_km2) {
  check_coverage(coverage);
  if (!(area_km2 >= 0.0)) throw ValidationError("area must be non-negative");
  if (!(density_mw_per_km2 > 0.0)) throw ValidationError("PV density must be positive");
  return area_km2 * density_mw_per_km2 * coverage;
}

std::vector<std::pair<double, double>> pv_scenarios(double total_area_km2,
                                                    const PVConfig& config) {
  config.validate();
  std::vector<double> coverages = config.coverages;
  std::sort(coverages.begin(), coverages.end());
  coverages.erase(std::unique(coverages.begin(), coverages.end()), coverages.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(coverages.size());
  for (double c : coverages) {
    out.emplace_back(c, pv_capacity_mw(total_area_km2, c, config.density_mw_per_km2));
  }
  return out;
}

double equivalent_pv_area_km2(double installed_mw, double factor_km2_per_mw) {
  if (!(installed_mw >= 0.0) || !(factor_km2_per_mw >= 0.0)) {
    throw ValidationError("installed capacity and factor must be non-negative");
  }
  return installed_mw * factor_km2_per_mw;
}

double golf_to_pv_ratio(double golf_area_km2, double installed_pv_mw,
                        double factor_km2_per_mw) {
  if (installed_pv_mw == 0.0) {
    throw ValidationError("golf-to-PV ratio undefined without installed PV");
  }
  return golf_area_km2 / equivalent_pv_area_km2(installed_pv_mw, factor_km2_per_mw);
}

}  // namespace landclaim::capacity
