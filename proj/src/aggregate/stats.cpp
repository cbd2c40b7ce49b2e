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

#include "landclaim/aggregate/stats.hpp"

#include <algorithm>
#include <map>

#include "landclaim/error.hpp"

namespace landclaim::aggregate {

StatsReport country_stats(std::span<const CourseFeature> features,
                          std::span<const std::string> assignments,
                          const std::vector<CountryBoundary>& boundaries) {
  if (features.size() != assignments.size()) {
    throw ValidationError("every feature needs exactly one country assignment");
  }
  std::map<std::string, const CountryBoundary*> by_code;
  for (const auto& b : boundaries) by_code[b.iso3] = &b;

  StatsReport report;
  std::map<std::string, CountryStats> acc;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string& code = assignments[i];
    if (code == kUnassigned || !by_code.count(code)) {
      ++report.unassigned_count;
      report.unassigned_area_km2 += features[i].area_km2;
      continue;
    }
    CountryStats& s = acc[code];
    s.iso3 = code;
    ++s.course_count;
    s.total_area_km2 += features[i].area_km2;
  }
  for (auto& [code, s] : acc) {
    const CountryBoundary& b = *by_code.at(code);
    s.name = b.name;
    s.mean_area_km2 = s.total_area_km2 / static_cast<double>(s.course_count);
    s.land_share = s.total_area_km2 / b.land_area_km2;
    report.countries.push_back(std::move(s));
  }
  std::sort(report.countries.begin(), report.countries.end(),
            [](const CountryStats& a, const CountryStats& b) {
              if (a.course_count != b.course_count) return a.course_count > b.course_count;
              return a.iso3 < b.iso3;
            });
  return report;
}

}  // namespace landclaim::aggregate
