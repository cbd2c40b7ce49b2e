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
#include <vector>

#include "landclaim/course.hpp"
#include "landclaim/ingest/raw_element.hpp"

namespace landclaim::ingest {

struct AssemblyResult {
  std::vector<CourseFeature> features;  // sorted by source_id
  std::vector<SkipRecord> skipped;
};

/// Joins open way segments end to end. Exact endpoint matches are taken
/// first, then matches within kSnapDegrees. Returns false if any segment
/// cannot be closed into a ring.
inline constexpr double kSnapDegrees = 1e-9;
bool assemble_rings(std::vector<std::vector<LonLat>> segments,
                    std::vector<Ring>& rings);

/// Turns leisure=golf_course elements into validated course features.
/// A tagged way that is also a member of a tagged relation is emitted only
/// through the relation. Tagged nodes and unassemblable or rejected
/// candidates are reported in `skipped`.
AssemblyResult assemble_course_features(std::span<const RawElement> elements);

}  // namespace landclaim::ingest
