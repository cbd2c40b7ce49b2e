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

#include "landclaim/geometry/area.hpp"
#include "landclaim/parallel/kernels.hpp"

namespace landclaim::parallel::serial {

std::vector<double> course_areas(std::span<const CourseFeature> features) {
  std::vector<double> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(geometry::geodesic_area_km2(f.polygons));
  return out;
}

std::vector<placement::PlacementResult> place_all(std::span<const CourseFeature> features,
                                                  const placement::PlacementConfig& config,
                                                  const placement::TurbineSpec& spec) {
  std::vector<placement::PlacementResult> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(placement::place_turbines(f, config, spec));
  return out;
}

std::vector<std::string> assign_all(std::span<const CourseFeature> features,
                                    const aggregate::CountryIndex& index) {
  std::vector<std::string> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(aggregate::assign_country(f, index));
  return out;
}

}  // namespace landclaim::parallel::serial
