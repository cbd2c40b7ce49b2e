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

#include "landclaim/geometry/projected_course.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landclaim::geometry {
namespace {

PlanarRing project_ring(const LocalFrame& frame, const Ring& ring) {
  PlanarRing out;
  out.reserve(ring.size());
  for (const auto& p : ring) out.push_back(frame.project(p));
  return out;
}

double min_ring_distance(const PlanarRing& ring, XY p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < ring.size(); ++i) {
    best = std::min(best, distance_to_segment(p, ring[i - 1], ring[i]));
  }
  return best;
}

}  // namespace

double distance_to_segment(XY p, XY a, XY b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool ring_contains_strict(const PlanarRing& ring, XY p) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const XY& a = ring[i];
    const XY& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

bool ring_on_boundary(const PlanarRing& ring, XY p, double tolerance) {
  for (std::size_t i = 1; i < ring.size(); ++i) {
    if (distance_to_segment(p, ring[i - 1], ring[i]) <= tolerance) return true;
  }
  return false;
}

ProjectedCourse::ProjectedCourse(const CourseFeature& feature)
    : ProjectedCourse(feature.polygons) {}

ProjectedCourse::ProjectedCourse(const MultiPolygon& polygons)
    : frame_(frame_center_for(polygons)) {
  polygons_.reserve(polygons.size());
  for (const auto& poly : polygons) {
    PlanarPolygon pp;
    pp.outer = project_ring(frame_, poly.outer);
    for (const auto& hole : poly.holes) {
      pp.holes.push_back(project_ring(frame_, hole));
    }
    for (const auto& v : pp.outer) {
      bounds_.extend(v.x, v.y);
      max_radius_m_ = std::max(max_radius_m_, std::hypot(v.x, v.y));
    }
    polygons_.push_back(std::move(pp));
  }
}

bool ProjectedCourse::contains(XY p) const {
  if (bounds_.empty()) return false;
  if (p.x < bounds_.min_x - kBoundaryToleranceM ||
      p.x > bounds_.max_x + kBoundaryToleranceM ||
      p.y < bounds_.min_y - kBoundaryToleranceM ||
      p.y > bounds_.max_y + kBoundaryToleranceM) {
    return false;
  }
  for (const auto& poly : polygons_) {
    if (!ring_on_boundary(poly.outer, p, kBoundaryToleranceM) &&
        !ring_contains_strict(poly.outer, p)) {
      continue;
    }
    bool in_hole = false;
    for (const auto& hole : poly.holes) {
      if (!ring_on_boundary(hole, p, kBoundaryToleranceM) &&
          ring_contains_strict(hole, p)) {
        in_hole = true;
        break;
      }
    }
    if (!in_hole) return true;
  }
  return false;
}

double ProjectedCourse::signed_distance(XY p, std::size_t index) const {
  const PlanarPolygon& poly = polygons_.at(index);
  bool inside = ring_contains_strict(poly.outer, p);
  double dist = min_ring_distance(poly.outer, p);
  for (const auto& hole : poly.holes) {
    if (inside && ring_contains_strict(hole, p)) inside = false;
    dist = std::min(dist, min_ring_distance(hole, p));
  }
  return inside ? dist : -dist;
}

bool point_in_course(LonLat point, const CourseFeature& feature) {
  const ProjectedCourse course(feature);
  return course.contains(course.frame().project(point));
}

}  // namespace landclaim::geometry
