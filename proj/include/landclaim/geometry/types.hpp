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

#include <algorithm>
#include <limits>
#include <vector>

namespace landclaim {

/// Mean radius of the sphere with the WGS84 ellipsoid's surface area.
inline constexpr double kAuthalicRadiusM = 6371007.2;

/// Geographic coordinate in degrees.
struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
  friend bool operator==(const LonLat&, const LonLat&) = default;
};

/// Planar coordinate in metres (x east, y north).
struct XY {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const XY&, const XY&) = default;
};

/// Closed coordinate ring: first == last.
using Ring = std::vector<LonLat>;

struct Polygon {
  Ring outer;
  std::vector<Ring> holes;
};

using MultiPolygon = std::vector<Polygon>;

/// Axis-aligned box; closed on all sides.
struct BBox {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  bool empty() const { return min_x > max_x || min_y > max_y; }

  void extend(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  void extend(const BBox& o) {
    min_x = std::min(min_x, o.min_x);
    min_y = std::min(min_y, o.min_y);
    max_x = std::max(max_x, o.max_x);
    max_y = std::max(max_y, o.max_y);
  }

  bool intersects(const BBox& o) const {
    return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y &&
           o.min_y <= max_y;
  }
  bool contains(double x, double y) const {
    return min_x <= x && x <= max_x && min_y <= y && y <= max_y;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

inline BBox bounds_of(const Ring& ring) {
  BBox b;
  for (const auto& p : ring) b.extend(p.lon, p.lat);
  return b;
}

inline BBox bounds_of(const MultiPolygon& mp) {
  BBox b;
  for (const auto& poly : mp) b.extend(bounds_of(poly.outer));
  return b;
}

}  // namespace landclaim
