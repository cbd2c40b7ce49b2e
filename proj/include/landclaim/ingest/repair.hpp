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

#include <optional>
#include <string>

#include "landclaim/course.hpp"

namespace landclaim::ingest {

struct RepairResult {
  std::optional<CourseFeature> feature;
  std::string rejection;  // set iff feature is empty

  bool accepted() const { return feature.has_value(); }
};

/// Bounded clean-up of an assembled feature: drops repeated consecutive
/// vertices, closes rings whose ends are within 1e-9°, drops rings with
/// fewer than three distinct vertices, orients outers counterclockwise and
/// holes clockwise, and recomputes area_km2. Rejects features with
/// coordinates out of range, a self-intersecting outer ring, or zero area.
RepairResult validate_and_repair(CourseFeature feature);

/// True if two non-adjacent edges of the closed ring touch or cross.
bool ring_self_intersects(const Ring& ring);

}  // namespace landclaim::ingest
