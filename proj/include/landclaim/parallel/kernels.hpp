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

#include <span>
#include <string>
#include <vector>

#include "landclaim/aggregate/boundaries.hpp"
#include "landclaim/course.hpp"
#include "landclaim/placement/placement.hpp"

// Per-course batch kernels. Each has a serial reference implementation and
// an OpenMP one; both return results in input order and must agree exactly.
// Exceptions thrown for one course are rethrown after the loop, the one with
// the lowest index first.
namespace landclaim::parallel {

enum class Execution { serial, parallel };

namespace serial {
std::vector<double> course_areas(std::span<const CourseFeature> features);
std::vector<placement::PlacementResult> place_all(std::span<const CourseFeature> features,
                                                  const placement::PlacementConfig& config,
                                                  const placement::TurbineSpec& spec);
std::vector<std::string> assign_all(std::span<const CourseFeature> features,
                                    const aggregate::CountryIndex& index);
}  // namespace serial

namespace omp {
std::vector<double> course_areas(std::span<const CourseFeature> features);
std::vector<placement::PlacementResult> place_all(std::span<const CourseFeature> features,
                                                  const placement::PlacementConfig& config,
                                                  const placement::TurbineSpec& spec);
std::vector<std::string> assign_all(std::span<const CourseFeature> features,
                                    const aggregate::CountryIndex& index);
int max_threads();
}  // namespace omp

inline std::vector<double> course_areas(std::span<const CourseFeature> features,
                                        Execution exec = Execution::parallel) {
  return exec == Execution::serial ? serial::course_areas(features)
                                   : omp::course_areas(features);
}

inline std::vector<placement::PlacementResult> place_all(
    std::span<const CourseFeature> features, const placement::PlacementConfig& config,
    const placement::TurbineSpec& spec, Execution exec = Execution::parallel) {
  return exec == Execution::serial ? serial::place_all(features, config, spec)
                                   : omp::place_all(features, config, spec);
}

inline std::vector<std::string> assign_all(std::span<const CourseFeature> features,
                                           const aggregate::CountryIndex& index,
                                           Execution exec = Execution::parallel) {
  return exec == Execution::serial ? serial::assign_all(features, index)
                                   : omp::assign_all(features, index);
}

}  // namespace landclaim::parallel
