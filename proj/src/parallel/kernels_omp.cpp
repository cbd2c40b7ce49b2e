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

#include <exception>

#include <omp.h>

#include "landclaim/geometry/area.hpp"
#include "landclaim/parallel/kernels.hpp"

namespace landclaim::parallel::omp {
namespace {

// Runs body(i) for every index; rethrows the lowest-index failure.
template <typename Body>
void for_each_index(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<double> course_areas(std::span<const CourseFeature> features) {
  std::vector<double> out(features.size());
  for_each_index(features.size(), [&](std::size_t i) {
    out[i] = geometry::geodesic_area_km2(features[i].polygons);
  });
  return out;
}

std::vector<placement::PlacementResult> place_all(std::span<const CourseFeature> features,
                                                  const placement::PlacementConfig& config,
                                                  const placement::TurbineSpec& spec) {
  std::vector<placement::PlacementResult> out(features.size());
  for_each_index(features.size(), [&](std::size_t i) {
    out[i] = placement::place_turbines(features[i], config, spec);
  });
  return out;
}

std::vector<std::string> assign_all(std::span<const CourseFeature> features,
                                    const aggregate::CountryIndex& index) {
  std::vector<std::string> out(features.size());
  for_each_index(features.size(), [&](std::size_t i) {
    out[i] = aggregate::assign_country(features[i], index);
  });
  return out;
}

}  // namespace landclaim::parallel::omp
