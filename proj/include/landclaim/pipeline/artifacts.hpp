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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "landclaim/aggregate/stats.hpp"
#include "landclaim/course.hpp"
#include "landclaim/placement/placement.hpp"

// Intermediate files passed between pipeline tasks. Doubles are written in
// shortest round-trip form so reloading is lossless.
namespace landclaim::pipeline {

std::string features_to_json(std::span<const CourseFeature> features);
std::vector<CourseFeature> features_from_json(std::string_view text);

std::string assignments_to_csv(std::span<const CourseFeature> features,
                               std::span<const std::string> iso3);
std::map<std::string, std::string> assignments_from_csv(std::string_view text);

std::string stats_to_json(const aggregate::StatsReport& stats);
aggregate::StatsReport stats_from_json(std::string_view text);

/// FeatureCollection of turbine Points with properties
/// {course_id, spacing_m, rated_power_mw}.
std::string placements_to_geojson(std::span<const placement::PlacementResult> results,
                                  double rated_power_mw);
/// Groups points back into per-course results (courses without turbines
/// are absent).
std::vector<placement::PlacementResult> placements_from_geojson(std::string_view text);

}  // namespace landclaim::pipeline
