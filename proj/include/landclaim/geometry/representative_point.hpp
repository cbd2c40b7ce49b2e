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

#include "landclaim/course.hpp"
#include "landclaim/geometry/projected_course.hpp"

namespace landclaim::geometry {

/// Pole of inaccessibility of the largest polygon, found by best-first grid
/// refinement in the local frame (16 initial cells across the longer bbox
/// side, refined to `precision_m`). Deterministic. Throws GeometryError for
/// zero-area input.
LonLat representative_point(const CourseFeature& feature,
                            double precision_m = 1.0);
XY representative_point(const ProjectedCourse& course,
                        double precision_m = 1.0);

}  // namespace landclaim::geometry
