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

// Writes a synthetic extract, boundaries and reference CSV for load testing.
//
//   landclaim_synth <dir> [courses per country]

#include <iostream>
#include <string>

#include "fixtures.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: landclaim_synth <dir> [courses per country]\n";
    return 2;
  }
  const int per_country = argc > 2 ? std::stoi(argv[2]) : 12;
  const auto world = landclaim::testing::write_synthetic_world(argv[1], 7, per_country);
  std::cout << world.course_count << " courses written to " << world.extract.string() << "\n";
  return 0;
}
