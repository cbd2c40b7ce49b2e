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

#include <vector>

#include "landclaim/course.hpp"
#include "landclaim/geometry/local_frame.hpp"
#include "landclaim/geometry/types.hpp"

namespace landclaim::geometry {

/// Points within this distance of a ring boundary count as on it.
inline constexpr double kBoundaryToleranceM = 1e-3;

using PlanarRing = std::vector<XY>;

struct PlanarPolygon {
  PlanarRing outer;
  std::vector<PlanarRing> holes;
};

/// A course projected once into its own LocalFrame so containment, distance
/// and lattice queries run in metres.
class ProjectedCourse {
 public:
  explicit ProjectedCourse(const CourseFeature& feature);
  explicit ProjectedCourse(const MultiPolygon& polygons);

  const LocalFrame& frame() const { return frame_; }
  const std::vector<PlanarPolygon>& polygons() const { return polygons_; }
  /// Planar bounds of the outer rings.
  const BBox& bounds() const { return bounds_; }
  /// Largest distance from the frame centre to any vertex.
  double max_radius_m() const { return max_radius_m_; }

  /// Even-odd rule; boundary points (within kBoundaryToleranceM) are inside,
  /// including points on a hole's boundary.
  bool contains(XY p) const;

  /// Distance to the nearest edge of `polygons()[index]`, positive inside.
  double signed_distance(XY p, std::size_t index) const;

 private:
  LocalFrame frame_;
  std::vector<PlanarPolygon> polygons_;
  BBox bounds_;
  double max_radius_m_ = 0.0;
};

bool ring_contains_strict(const PlanarRing& ring, XY p);
bool ring_on_boundary(const PlanarRing& ring, XY p, double tolerance);
double distance_to_segment(XY p, XY a, XY b);

/// Point-in-course test in the course's local frame.
bool point_in_course(LonLat point, const CourseFeature& feature);

}  // namespace landclaim::geometry
