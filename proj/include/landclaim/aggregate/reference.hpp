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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace landclaim::aggregate {

enum class Technology { pv_utility, wind_onshore };

std::string_view to_string(Technology t);
Technology technology_from(std::string_view s);

struct ReferenceCapacity {
  std::string iso3;
  Technology technology = Technology::pv_utility;
  int year = 2023;
  double capacity_mw = 0.0;
  std::string source_note;
};

/// Installed (2023) and projected (2028) national capacities.
/// CSV header: iso3,technology,year,capacity_mw,source_note
class ReferenceTable {
 public:
  ReferenceTable() = default;
  explicit ReferenceTable(std::vector<ReferenceCapacity> rows);

  static ReferenceTable parse_csv(std::string_view text);
  static ReferenceTable load_csv(const std::filesystem::path& path);

  std::optional<double> capacity_mw(std::string_view iso3, Technology tech,
                                    int year) const;
  const std::vector<ReferenceCapacity>& rows() const { return rows_; }

 private:
  std::vector<ReferenceCapacity> rows_;
};

}  // namespace landclaim::aggregate
