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

#include "landclaim/geometry/local_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "landclaim/error.hpp"

namespace landclaim::geometry {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double normalize_lon(double lon) {
  while (lon > 180.0) lon -= 360.0;
  while (lon < -180.0) lon += 360.0;
  return lon;
}

}  // namespace

double geodesic_distance_m(LonLat a, LonLat b) {
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double sdlat = std::sin(0.5 * (lat2 - lat1));
  const double sdlon = std::sin(0.5 * (b.lon - a.lon) * kDegToRad);
  double h = sdlat * sdlat + std::cos(lat1) * std::cos(lat2) * sdlon * sdlon;
  h = std::min(1.0, h);
  return 2.0 * kAuthalicRadiusM * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

LocalFrame::LocalFrame(LonLat center)
    : center_(center),
      lon0_(center.lon * kDegToRad),
      sin_lat0_(std::sin(center.lat * kDegToRad)),
      cos_lat0_(std::cos(center.lat * kDegToRad)) {}

XY LocalFrame::project(LonLat p) const {
  if (p == center_) return {0.0, 0.0};
  const double lat = p.lat * kDegToRad;
  const double lat0 = center_.lat * kDegToRad;
  const double dlon = (p.lon - center_.lon) * kDegToRad;
  const double cos_lat = std::cos(lat);

  const double sdlat = std::sin(0.5 * (lat - lat0));
  const double sdlon = std::sin(0.5 * dlon);
  double h = sdlat * sdlat + cos_lat0_ * cos_lat * sdlon * sdlon;
  h = std::min(1.0, h);
  const double c = 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
  if (c > std::numbers::pi - 1e-9) {
    throw GeometryError("azimuthal projection undefined for antipodal point");
  }

  // Azimuth from the centre; the northing term is rewritten as
  // sin(Δφ) + 2 sin φ0 cos φ sin²(Δλ/2) to stay accurate at short range.
  const double east = std::sin(dlon) * cos_lat;
  const double north =
      std::sin(lat - lat0) + 2.0 * sin_lat0_ * cos_lat * sdlon * sdlon;
  const double az = std::atan2(east, north);
  const double rho = kAuthalicRadiusM * c;
  return {rho * std::sin(az), rho * std::cos(az)};
}

LonLat LocalFrame::unproject(XY p) const {
  const double rho = std::hypot(p.x, p.y);
  if (rho == 0.0) return center_;
  const double c = rho / kAuthalicRadiusM;
  const double az = std::atan2(p.x, p.y);
  const double sin_c = std::sin(c);
  const double cos_c = std::cos(c);
  const double sin_lat =
      sin_lat0_ * cos_c + cos_lat0_ * sin_c * std::cos(az);
  const double lat = std::asin(std::clamp(sin_lat, -1.0, 1.0));
  const double lon =
      lon0_ + std::atan2(std::sin(az) * sin_c * cos_lat0_,
                         cos_c - sin_lat0_ * sin_lat);
  return {normalize_lon(lon * kRadToDeg), lat * kRadToDeg};
}

double LocalFrame::max_scale_factor(double radius_m) {
  const double c = radius_m / kAuthalicRadiusM;
  if (c < 1e-12) return 1.0;
  return c / std::sin(c);
}

LonLat frame_center_for(const MultiPolygon& polygons) {
  BBox box;
  bool have_ref = false;
  double ref_lon = 0.0;
  for (const auto& poly : polygons) {
    for (const auto& p : poly.outer) {
      if (!have_ref) {
        ref_lon = p.lon;
        have_ref = true;
      }
      double lon = p.lon;
      while (lon - ref_lon > 180.0) lon -= 360.0;
      while (lon - ref_lon < -180.0) lon += 360.0;
      box.extend(lon, p.lat);
    }
  }
  if (box.empty()) return {};
  return {normalize_lon(0.5 * (box.min_x + box.max_x)),
          0.5 * (box.min_y + box.max_y)};
}

}  // namespace landclaim::geometry
