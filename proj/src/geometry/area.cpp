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

#include "landclaim/geometry/area.hpp"

#include <cmath>
#include <numbers>

namespace landclaim::geometry {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

double wrapped_delta_deg(double from, double to) {
  double d = to - from;
  if (d > 180.0) d -= 360.0;
  if (d < -180.0) d += 360.0;
  return d;
}

// sin(a) - sin(b) without cancellation for nearby angles.
double sin_difference(double a, double b) {
  return 2.0 * std::cos(0.5 * (a + b)) * std::sin(0.5 * (a - b));
}

}  // namespace

double ring_signed_area_m2(std::span<const LonLat> ring) {
  if (ring.size() < 3) return 0.0;
  const double ref_lat = ring.front().lat * kDegToRad;

  // Trapezoid rule for -∮ sin φ dλ, with sin φ taken relative to the first
  // vertex. The offset term is added back through the winding total, which is
  // zero unless the ring encircles a pole.
  double sum = 0.0;
  double winding = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LonLat& a = ring[i];
    const LonLat& b = ring[(i + 1) % n];
    const double dlon = wrapped_delta_deg(a.lon, b.lon) * kDegToRad;
    const double sa = sin_difference(a.lat * kDegToRad, ref_lat);
    const double sb = sin_difference(b.lat * kDegToRad, ref_lat);
    sum += dlon * (sa + sb);
    winding += dlon;
  }
  sum += 2.0 * std::sin(ref_lat) * winding;
  return -0.5 * sum * kAuthalicRadiusM * kAuthalicRadiusM;
}

double geodesic_area_km2(const Polygon& polygon) {
  double m2 = std::abs(ring_signed_area_m2(polygon.outer));
  for (const auto& hole : polygon.holes) m2 -= std::abs(ring_signed_area_m2(hole));
  return m2 > 0.0 ? m2 * 1e-6 : 0.0;
}

double geodesic_area_km2(const MultiPolygon& polygons) {
  double total = 0.0;
  for (const auto& poly : polygons) total += geodesic_area_km2(poly);
  return total;
}

}  // namespace landclaim::geometry
