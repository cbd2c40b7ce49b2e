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
#include "landclaim/placement/placement.hpp"

namespace landclaim::placement {

std::vector<XY> generate_candidate_lattice(const geometry::ProjectedCourse& course,
                                           double spacing_m) {
  if (!(spacing_m > 0.0)) throw ValidationError("spacing must be positive");
  std::vector<XY> points;
  const BBox& box = course.bounds();
  if (box.empty()) return points;

  // Pitch and row height are exact power-of-two multiples of `spacing_m`
  // for halved spacings, so the s/2 lattice reproduces the s lattice's
  // coordinates bit for bit.
  const double stretch =
      geometry::LocalFrame::max_scale_factor(course.max_radius_m()) * (1.0 + 1e-12);
  const double pitch = spacing_m * stretch;
  const double half_pitch = 0.5 * pitch;
  const double row_height = pitch * (std::sqrt(3.0) / 2.0);
  const double slack = geometry::kBoundaryToleranceM;

  for (long row = 0;; ++row) {
    const double y = box.min_y + static_cast<double>(row) * row_height;
    if (y > box.max_y + slack) break;
    const long offset = row % 2;
    for (long col = 0;; ++col) {
      const double x = box.min_x + static_cast<double>(2 * col + offset) * half_pitch;
      if (x > box.max_x + slack) break;
      const XY p{x, y};
      if (course.contains(p)) points.push_back(p);
    }
  }
  return points;
}

std::vector<LonLat> generate_candidate_lattice(const CourseFeature& feature,
                                               double spacing_m) {
  const geometry::ProjectedCourse course(feature);
  std::vector<LonLat> out;
  for (const XY& p : generate_candidate_lattice(course, spacing_m)) {
    out.push_back(course.frame().unproject(p));
  }
  return out;
}

}  // namespace landclaim::placement
