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

#include "landclaim/geometry/types.hpp"

namespace landclaim::geometry {

/// Signed ring area in m² on the authalic sphere, positive when the ring
/// runs counterclockwise in (lon, lat). Edges are straight lines in the
/// cylindrical equal-area plane (λ, sin φ), so parallels and meridians are
/// exact. Longitude steps are unwrapped per edge; rings with fewer than three
/// distinct vertices return 0.
double ring_signed_area_m2(std::span<const LonLat> ring);

/// Area of polygons in km²: |outer| minus |holes| per polygon, clamped at 0.
double geodesic_area_km2(const MultiPolygon& polygons);
double geodesic_area_km2(const Polygon& polygon);

}  // namespace landclaim::geometry
