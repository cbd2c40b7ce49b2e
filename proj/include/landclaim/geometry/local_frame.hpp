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

#include "landclaim/geometry/types.hpp"

namespace landclaim::geometry {

/// Great-circle distance on the authalic sphere, metres.
double geodesic_distance_m(LonLat a, LonLat b);

/// Spherical azimuthal equidistant projection about a fixed centre.
/// Distances and bearings from the centre are preserved; tangential scale
/// grows as c / sin c with angular distance c.
class LocalFrame {
 public:
  explicit LocalFrame(LonLat center);

  LonLat center() const { return center_; }

  /// Throws GeometryError for (near-)antipodal points.
  XY project(LonLat p) const;
  LonLat unproject(XY p) const;

  /// Largest tangential scale factor for points within `radius_m` of the
  /// centre. Planar distances overstate geodesic ones by at most this factor.
  static double max_scale_factor(double radius_m);

 private:
  LonLat center_;
  double lon0_;
  double sin_lat0_;
  double cos_lat0_;
};

/// Centre of the lon/lat bounding box of all outer rings, with longitudes
/// unwrapped around the first vertex so antimeridian courses stay compact.
LonLat frame_center_for(const MultiPolygon& polygons);

}  // namespace landclaim::geometry
