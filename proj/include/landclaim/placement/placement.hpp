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

#include "landclaim/course.hpp"
#include "landclaim/geometry/projected_course.hpp"

namespace landclaim::placement {

/// Reference turbine: 5.5 MW, 135 m rotor.
struct TurbineSpec {
  double rated_power_mw = 5.5;
  /// Carried for reporting; placement applies spacing only.
  double rotor_diameter_m = 135.0;

  void validate() const;
};

struct PlacementConfig {
  double spacing_m = 1000.0;
  /// Place one turbine at the representative point when the lattice misses
  /// a course with positive area.
  bool guarantee_one = true;

  void validate() const;
};

struct PlacementResult {
  std::string course_id;
  double spacing_m = 0.0;
  std::vector<LonLat> turbines;
  std::size_t count = 0;
  double capacity_mw = 0.0;
};

/// Hexagonal lattice in the course's local frame. Rows sit at
/// y = min_y + j·h·√3/2 and columns at x = min_x + (j mod 2)·h/2 + m·h,
/// anchored at the projected bbox minimum corner, where h is `spacing_m`
/// stretched by the frame's largest tangential scale factor so geodesic
/// spacing never drops below `spacing_m`. Keeps points inside the course
/// (boundary inclusive).
std::vector<LonLat> generate_candidate_lattice(const CourseFeature& feature,
                                               double spacing_m);
std::vector<XY> generate_candidate_lattice(const geometry::ProjectedCourse& course,
                                           double spacing_m);

/// Throws ValidationError for a zero-area feature or invalid config/spec.
PlacementResult place_turbines(const CourseFeature& feature,
                               const PlacementConfig& config,
                               const TurbineSpec& spec);

double wind_capacity_mw(std::span<const PlacementResult> results);

}  // namespace landclaim::placement
