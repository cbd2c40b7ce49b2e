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
#include <string>

#include "landclaim/aggregate/comparison.hpp"
#include "landclaim/aggregate/stats.hpp"

namespace landclaim::pipeline {

/// Horizontal bars of total course area per country, annotated with counts.
std::string area_chart_svg(const aggregate::StatsReport& stats, std::size_t top_n);

/// One panel per country: potential per scenario next to installed 2023 and
/// projected 2028 capacity. A panel switches to a log axis when a reference
/// value exceeds ten times the country's largest potential.
std::string potential_chart_svg(std::span<const aggregate::PotentialComparison> rows,
                                aggregate::Technology technology,
                                const std::string& title);

}  // namespace landclaim::pipeline
