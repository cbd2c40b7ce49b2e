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

#include "landclaim/pipeline/task_graph.hpp"

#include <algorithm>
#include <future>
#include <set>

#include <json.hpp>

#include "landclaim/error.hpp"
#include "landclaim/hash.hpp"
#include "landclaim/io.hpp"

namespace landclaim::pipeline {
namespace fs = std::filesystem;

namespace {

constexpr const char* kMarker = ".task.json";

void link_or_copy(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  fs::create_hard_link(from, to, ec);
  if (ec) fs::copy_file(from, to, fs::copy_options::overwrite_existing);
}

std::map<std::string, std::string> hash_outputs(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name == kMarker) continue;
    out[name] = sha256_file(entry.path());
  }
  return out;
}

}  // namespace

std::string_view to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::ran: return "ran";
    case TaskStatus::cached: return "cached";
    case TaskStatus::failed: return "failed";
    case TaskStatus::blocked: return "blocked";
  }
  return "?";
}

const fs::path& TaskContext::input(const std::string& label) const {
  auto it = inputs_.find(label);
  if (it == inputs_.end()) throw Error("task read undeclared input '" + label + "'");
  return it->second;
}

std::vector<std::string> TaskContext::input_labels(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [label, path] : inputs_) {
    if (label.rfind(prefix, 0) == 0) out.push_back(label);
  }
  return out;
}

TaskGraph::TaskGraph(fs::path cache_dir) : cache_dir_(std::move(cache_dir)) {}

void TaskGraph::add(TaskSpec spec) {
  for (const auto& t : tasks_) {
    if (t.name == spec.name) throw Error("duplicate task " + spec.name);
  }
  for (const auto& d : spec.deps) {
    if (std::none_of(tasks_.begin(), tasks_.end(),
                     [&](const TaskSpec& t) { return t.name == d; })) {
      throw Error("task " + spec.name + " depends on unknown task " + d);
    }
  }
  tasks_.push_back(std::move(spec));
}

TaskRecord TaskGraph::execute(const TaskSpec& spec,
                              const std::map<std::string, TaskRecord>& done) {
  TaskRecord rec;
  rec.name = spec.name;
  try {
    std::map<std::string, fs::path> sources;
    for (const auto& [label, path] : spec.files) {
      if (!fs::is_regular_file(path)) {
        throw Error("missing input file '" + path.string() + "' (" + label + ")");
      }
      rec.input_hashes[label] = sha256_file(path);
      sources[label] = path;
    }
    for (const auto& dep : spec.deps) {
      const TaskRecord& up = done.at(dep);
      for (const auto& [file, hash] : up.output_hashes) {
        const std::string label = dep + "/" + file;
        rec.input_hashes[label] = hash;
        sources[label] = up.output_dir / file;
      }
    }

    Sha256 key;
    key.field(spec.name).field(spec.params);
    for (const auto& [label, hash] : rec.input_hashes) key.field(label).field(hash);
    rec.key = key.hex();

    const fs::path task_root = cache_dir_ / "tasks" / spec.name;
    rec.output_dir = task_root / rec.key;
    if (fs::exists(rec.output_dir / kMarker)) {
      const auto marker = nlohmann::json::parse(read_file(rec.output_dir / kMarker));
      rec.output_hashes = marker.at("outputs").get<std::map<std::string, std::string>>();
      rec.status = TaskStatus::cached;
      return rec;
    }

    fs::create_directories(task_root);
    const fs::path work = task_root / (rec.key + ".tmp-" + unique_suffix());
    const fs::path staged = work / "inputs";
    const fs::path outputs = work / "outputs";
    fs::create_directories(staged);
    fs::create_directories(outputs);

    std::map<std::string, fs::path> inputs;
    for (const auto& [label, src] : sources) {
      fs::path dst = staged / label;
      fs::create_directories(dst.parent_path());
      link_or_copy(src, dst);
      inputs[label] = dst;
    }

    try {
      TaskContext ctx(std::move(inputs), outputs);
      spec.run(ctx);
    } catch (...) {
      std::error_code ec;
      fs::remove_all(work, ec);
      throw;
    }

    rec.output_hashes = hash_outputs(outputs);
    nlohmann::json marker = {{"task", spec.name}, {"key", rec.key},
                             {"inputs", rec.input_hashes}, {"outputs", rec.output_hashes}};
    write_file_atomic(outputs / kMarker, marker.dump(2));

    std::error_code ec;
    fs::rename(outputs, rec.output_dir, ec);
    if (ec && !fs::exists(rec.output_dir / kMarker)) {
      throw Error("cannot publish task output " + rec.output_dir.string() + ": " + ec.message());
    }
    fs::remove_all(work, ec);
    rec.status = TaskStatus::ran;
  } catch (const std::exception& e) {
    rec.status = TaskStatus::failed;
    rec.error = e.what();
  }
  return rec;
}

std::vector<TaskRecord> TaskGraph::run(const std::vector<std::string>& targets) {
  std::set<std::string> wanted;
  if (targets.empty()) {
    for (const auto& t : tasks_) wanted.insert(t.name);
  } else {
    std::vector<std::string> stack = targets;
    while (!stack.empty()) {
      const std::string name = stack.back();
      stack.pop_back();
      if (!wanted.insert(name).second) continue;
      auto it = std::find_if(tasks_.begin(), tasks_.end(),
                             [&](const TaskSpec& t) { return t.name == name; });
      if (it == tasks_.end()) throw Error("unknown task " + name);
      stack.insert(stack.end(), it->deps.begin(), it->deps.end());
    }
  }

  // tasks_ is already topologically ordered (add() requires known deps).
  std::map<std::string, TaskRecord> done;
  std::set<std::string> pending;
  for (const auto& t : tasks_) {
    if (wanted.count(t.name)) pending.insert(t.name);
  }

  while (!pending.empty()) {
    std::vector<const TaskSpec*> ready;
    for (const auto& t : tasks_) {
      if (!pending.count(t.name)) continue;
      bool deps_done = true;
      bool deps_ok = true;
      for (const auto& d : t.deps) {
        auto it = done.find(d);
        if (it == done.end()) {
          deps_done = false;
        } else if (it->second.status == TaskStatus::failed ||
                   it->second.status == TaskStatus::blocked) {
          deps_ok = false;
        }
      }
      if (!deps_ok) {
        TaskRecord rec;
        rec.name = t.name;
        rec.status = TaskStatus::blocked;
        rec.error = "upstream task failed";
        done[t.name] = rec;
        pending.erase(t.name);
        continue;
      }
      if (deps_done) ready.push_back(&t);
    }
    if (ready.empty()) continue;

    const std::map<std::string, TaskRecord> snapshot = done;
    std::vector<std::future<TaskRecord>> running;
    for (const TaskSpec* t : ready) {
      running.push_back(std::async(std::launch::async,
                                   [this, t, &snapshot] { return execute(*t, snapshot); }));
    }
    for (std::size_t i = 0; i < ready.size(); ++i) {
      TaskRecord rec = running[i].get();
      done[rec.name] = rec;
      pending.erase(rec.name);
    }
  }

  std::vector<TaskRecord> records;
  for (const auto& t : tasks_) {
    if (done.count(t.name)) records.push_back(done.at(t.name));
  }
  return records;
}

}  // namespace landclaim::pipeline
