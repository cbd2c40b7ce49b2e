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

#include <string>
#include <string_view>
#include <vector>

namespace landclaim::csv {

/// Splits one RFC 4180 record (no embedded newlines).
std::vector<std::string> split_record(std::string_view line);

/// Quotes a field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

/// Fixed-point with six decimals, '.' separator, no grouping.
std::string fixed6(double value);

}  // namespace landclaim::csv
