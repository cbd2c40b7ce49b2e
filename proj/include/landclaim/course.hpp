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

#include "landclaim/geometry/types.hpp"

namespace landclaim {

/// One golf course as counted by the pipeline.
struct CourseFeature {
  std::string source_id;  // "way/123" or "relation/456"
  std::optional<std::string> name;
  MultiPolygon polygons;
  double area_km2 = 0.0;
};

}  // namespace landclaim
