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

#include <cmath>

#include "landclaim/error.hpp"
#include "landclaim/geometry/representative_point.hpp"
#include "landclaim/placement/placement.hpp"

namespace landclaim::placement {

void TurbineSpec::validate() const {
  if (!(rated_power_mw > 0.0)) throw ValidationError("rated_power_mw must be positive");
  if (!(rotor_diameter_m > 0.0)) throw ValidationError("rotor_diameter_m must be positive");
}

void PlacementConfig::validate() const {
  if (!(spacing_m > 0.0) || !std::isfinite(spacing_m)) {
    throw ValidationError("spacing_m must be positive");
  }
}

PlacementResult place_turbines(const CourseFeature& feature,
                               const PlacementConfig& config,
                               const TurbineSpec& spec) {
  config.validate();
  spec.validate();
  if (!(feature.area_km2 > 0.0)) {
    throw ValidationError("cannot place turbines on zero-area course " +
                          feature.source_id);
  }

  const geometry::ProjectedCourse course(feature);
  PlacementResult result;
  result.course_id = feature.source_id;
  result.spacing_m = config.spacing_m;
  for (const XY& p : generate_candidate_lattice(course, config.spacing_m)) {
    result.turbines.push_back(course.frame().unproject(p));
  }
  if (result.turbines.empty() && config.guarantee_one) {
    result.turbines.push_back(
        course.frame().unproject(geometry::representative_point(course)));
  }
  result.count = result.turbines.size();
  result.capacity_mw = static_cast<double>(result.count) * spec.rated_power_mw;
  return result;
}

double wind_capacity_mw(std::span<const PlacementResult> results) {
  double total = 0.0;
  for (const auto& r : results) total += r.capacity_mw;
  return total;
}

}  // namespace landclaim::placement
