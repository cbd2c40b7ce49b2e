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
#include <vector>

#include "landclaim/pipeline/config.hpp"
#include "landclaim/pipeline/task_graph.hpp"

namespace landclaim::pipeline {

enum class Stage { fetch, ingest, stats, place, potential, report, run };

struct RunManifest {
  std::string created_utc;
  std::vector<TaskRecord> tasks;
  std::vector<std::string> published;  // files written to out_dir

  bool ok() const;
};

/// Builds the task graph for `config` and runs everything `target` needs:
/// fetch → ingest → stats / place (one task per spacing) → potential →
/// report. The target's outputs (everything, for Stage::run) are published
/// to config.out_dir along with manifest.json. Throws ValidationError for
/// bad parameters; task failures are reported in the manifest.
RunManifest run_pipeline(const RunConfig& config, Stage target = Stage::run);

std::string manifest_json(const RunManifest& manifest);

}  // namespace landclaim::pipeline
