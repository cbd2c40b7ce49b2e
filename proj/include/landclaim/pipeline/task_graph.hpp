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
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace landclaim::pipeline {

/// What a running task may see: its staged inputs and its output directory.
class TaskContext {
 public:
  TaskContext(std::map<std::string, std::filesystem::path> inputs,
              std::filesystem::path output_dir)
      : inputs_(std::move(inputs)), output_dir_(std::move(output_dir)) {}

  /// Staged path of an external input ("extract") or an upstream output
  /// ("ingest/features.json"). Throws if the label was not declared.
  const std::filesystem::path& input(const std::string& label) const;
  std::vector<std::string> input_labels(const std::string& prefix) const;
  std::filesystem::path output(const std::string& file) const { return output_dir_ / file; }

 private:
  std::map<std::string, std::filesystem::path> inputs_;
  std::filesystem::path output_dir_;
};

struct TaskSpec {
  std::string name;
  std::vector<std::string> deps;                     // upstream task names
  std::map<std::string, std::filesystem::path> files;  // external inputs
  std::string params;                                // canonical parameter text
  std::function<void(TaskContext&)> run;
};

enum class TaskStatus { ran, cached, failed, blocked };
std::string_view to_string(TaskStatus s);

struct TaskRecord {
  std::string name;
  std::string key;
  TaskStatus status = TaskStatus::blocked;
  std::map<std::string, std::string> input_hashes;
  std::map<std::string, std::string> output_hashes;
  std::filesystem::path output_dir;
  std::string error;
};

/// Content-addressed task DAG. A task's key hashes its name, parameters and
/// the bytes of every declared input (external files and upstream outputs);
/// outputs live under <cache>/tasks/<name>/<key>/ and are reused whenever
/// the key matches. Inputs are staged into a private directory so a task
/// cannot read anything it did not declare. Ready tasks run concurrently; a
/// failure blocks its dependents but not independent branches.
class TaskGraph {
 public:
  explicit TaskGraph(std::filesystem::path cache_dir);

  void add(TaskSpec spec);

  /// Runs `targets` and their dependencies (everything if empty). Records
  /// come back in topological order.
  std::vector<TaskRecord> run(const std::vector<std::string>& targets = {});

 private:
  TaskRecord execute(const TaskSpec& spec, const std::map<std::string, TaskRecord>& done);

  std::filesystem::path cache_dir_;
  std::vector<TaskSpec> tasks_;
};

}  // namespace landclaim::pipeline
