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
#include <span>
#include <string>
#include <vector>

#include "landclaim/aggregate/boundaries.hpp"

namespace landclaim::aggregate {

struct CountryStats {
  std::string iso3;
  std::string name;
  std::size_t course_count = 0;
  double total_area_km2 = 0.0;
  double mean_area_km2 = 0.0;
  double land_share = 0.0;  // fraction, not percent
};

struct StatsReport {
  /// Countries with at least one course; course_count desc, iso3 asc.
  std::vector<CountryStats> countries;
  std::size_t unassigned_count = 0;
  double unassigned_area_km2 = 0.0;
};

/// `assignments[i]` is the iso3 (or "unassigned") of `features[i]`.
StatsReport country_stats(std::span<const CourseFeature> features,
                          std::span<const std::string> assignments,
                          const std::vector<CountryBoundary>& boundaries);

}  // namespace landclaim::aggregate
