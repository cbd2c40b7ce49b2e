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

#include "landclaim/aggregate/reference.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "landclaim/csv.hpp"
#include "landclaim/error.hpp"
#include "landclaim/io.hpp"

namespace landclaim::aggregate {

std::string_view to_string(Technology t) {
  return t == Technology::pv_utility ? "pv_utility" : "wind_onshore";
}

Technology technology_from(std::string_view s) {
  if (s == "pv_utility") return Technology::pv_utility;
  if (s == "wind_onshore") return Technology::wind_onshore;
  throw ValidationError("unknown technology '" + std::string(s) + "'");
}

ReferenceTable::ReferenceTable(std::vector<ReferenceCapacity> rows)
    : rows_(std::move(rows)) {
  std::set<std::tuple<std::string, Technology, int>> seen;
  for (const auto& r : rows_) {
    if (r.year != 2023 && r.year != 2028) {
      throw ValidationError("reference year must be 2023 or 2028 (" + r.iso3 + ")");
    }
    if (!(r.capacity_mw >= 0.0)) {
      throw ValidationError("negative reference capacity for " + r.iso3);
    }
    if (!seen.emplace(r.iso3, r.technology, r.year).second) {
      throw ValidationError("duplicate reference row for " + r.iso3 + " " +
                            std::string(to_string(r.technology)) + " " +
                            std::to_string(r.year));
    }
  }
}

ReferenceTable ReferenceTable::parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("reference CSV is empty");
  if (csv::split_record(line) !=
      std::vector<std::string>{"iso3", "technology", "year", "capacity_mw", "source_note"}) {
    throw ValidationError("reference CSV header must be "
                          "iso3,technology,year,capacity_mw,source_note");
  }
  std::vector<ReferenceCapacity> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto f = csv::split_record(line);
    if (f.size() != 5) {
      throw ValidationError("reference CSV line " + std::to_string(line_no) +
                            ": expected 5 fields");
    }
    ReferenceCapacity r;
    r.iso3 = f[0];
    r.technology = technology_from(f[1]);
    try {
      r.year = std::stoi(f[2]);
      r.capacity_mw = std::stod(f[3]);
    } catch (const std::exception&) {
      throw ValidationError("reference CSV line " + std::to_string(line_no) +
                            ": bad number");
    }
    r.source_note = f[4];
    rows.push_back(std::move(r));
  }
  return ReferenceTable(std::move(rows));
}

ReferenceTable ReferenceTable::load_csv(const std::filesystem::path& path) {
  return parse_csv(read_file(path));
}

std::optional<double> ReferenceTable::capacity_mw(std::string_view iso3, Technology tech,
                                                  int year) const {
  for (const auto& r : rows_) {
    if (r.iso3 == iso3 && r.technology == tech && r.year == year) return r.capacity_mw;
  }
  return std::nullopt;
}

}  // namespace landclaim::aggregate
