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

#include "landclaim/geometry/representative_point.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "landclaim/error.hpp"

namespace landclaim::geometry {
namespace {

struct Cell {
  double x;
  double y;
  double half;      // half the cell side
  double distance;  // signed distance of the centre
  double potential; // upper bound on distance anywhere in the cell
};

struct LowerPotential {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.potential != b.potential) return a.potential < b.potential;
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  }
};

double shoelace(const PlanarRing& ring) {
  double s = 0.0;
  for (std::size_t i = 1; i < ring.size(); ++i) {
    s += ring[i - 1].x * ring[i].y - ring[i].x * ring[i - 1].y;
  }
  return 0.5 * s;
}

double polygon_area(const PlanarPolygon& poly) {
  double a = std::abs(shoelace(poly.outer));
  for (const auto& hole : poly.holes) a -= std::abs(shoelace(hole));
  return a;
}

XY ring_centroid(const PlanarRing& ring) {
  double cx = 0.0;
  double cy = 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 1; i < ring.size(); ++i) {
    const XY& a = ring[i - 1];
    const XY& b = ring[i];
    const double cross = a.x * b.y - b.x * a.y;
    cx += (a.x + b.x) * cross;
    cy += (a.y + b.y) * cross;
    twice_area += cross;
  }
  if (twice_area == 0.0) return ring.front();
  return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

constexpr std::size_t kMaxCells = 1'000'000;

}  // namespace

XY representative_point(const ProjectedCourse& course, double precision_m) {
  const auto& polys = course.polygons();
  std::size_t largest = 0;
  double largest_area = 0.0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const double a = polygon_area(polys[i]);
    if (a > largest_area) {
      largest_area = a;
      largest = i;
    }
  }
  const BBox& all = course.bounds();
  const double extent = std::max(all.max_x - all.min_x, all.max_y - all.min_y);
  if (!(largest_area > 1e-9 * extent * extent)) {
    throw GeometryError("representative point of a zero-area feature");
  }

  BBox box;
  for (const auto& v : polys[largest].outer) box.extend(v.x, v.y);
  const double width = box.max_x - box.min_x;
  const double height = box.max_y - box.min_y;
  const double cell_size = std::max(width, height) / 16.0;
  const double half = 0.5 * cell_size;

  auto make_cell = [&](double x, double y, double h) {
    const double d = course.signed_distance({x, y}, largest);
    return Cell{x, y, h, d, d + h * std::numbers::sqrt2};
  };

  std::priority_queue<Cell, std::vector<Cell>, LowerPotential> queue;
  for (double x = box.min_x; x < box.max_x; x += cell_size) {
    for (double y = box.min_y; y < box.max_y; y += cell_size) {
      queue.push(make_cell(x + half, y + half, half));
    }
  }

  const XY centroid = ring_centroid(polys[largest].outer);
  Cell best = make_cell(centroid.x, centroid.y, 0.0);
  const Cell box_center = make_cell(box.min_x + 0.5 * width,
                                    box.min_y + 0.5 * height, 0.0);
  if (box_center.distance > best.distance) best = box_center;

  std::size_t visited = 0;
  while (!queue.empty() && visited < kMaxCells) {
    const Cell cell = queue.top();
    queue.pop();
    ++visited;
    if (cell.distance > best.distance) best = cell;
    if (cell.potential - best.distance <= precision_m) continue;
    const double h = 0.5 * cell.half;
    queue.push(make_cell(cell.x - h, cell.y - h, h));
    queue.push(make_cell(cell.x + h, cell.y - h, h));
    queue.push(make_cell(cell.x - h, cell.y + h, h));
    queue.push(make_cell(cell.x + h, cell.y + h, h));
  }

  if (!(best.distance > 0.0)) {
    throw GeometryError("no interior point found");
  }
  return {best.x, best.y};
}

LonLat representative_point(const CourseFeature& feature, double precision_m) {
  const ProjectedCourse course(feature);
  return course.frame().unproject(representative_point(course, precision_m));
}

}  // namespace landclaim::geometry
