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

#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "landclaim/error.hpp"
#include "landclaim/pipeline/config.hpp"
#include "landclaim/pipeline/run.hpp"

namespace fs = std::filesystem;
using landclaim::pipeline::RunConfig;
using landclaim::pipeline::Stage;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitTaskFailure = 3;

struct Flags {
  std::string config;
  std::string extract;
  std::string boundaries;
  std::string reference;
  std::string out;
  std::string cache;
  std::string endpoint;
  std::vector<double> spacing;
  std::vector<double> coverage;
  std::optional<std::size_t> top_n;
  std::vector<std::string> exclude;
  bool no_exclude = false;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config, "JSON run configuration");
  cmd.add_option("--extract", f.extract, "Overpass JSON extract (skips fetching)");
  cmd.add_option("--boundaries", f.boundaries, "Admin-0 boundaries GeoJSON");
  cmd.add_option("--reference", f.reference, "Reference capacity CSV");
  cmd.add_option("--out", f.out, "Output directory");
  cmd.add_option("--cache", f.cache, "Cache directory");
  cmd.add_option("--endpoint", f.endpoint, "Overpass interpreter URL");
  cmd.add_option("--spacing", f.spacing, "Turbine spacings in metres")->delimiter(',');
  cmd.add_option("--coverage", f.coverage, "PV coverage fractions")->delimiter(',');
  cmd.add_option("--top-n", f.top_n, "Countries in aggregate rows and charts");
  cmd.add_option("--exclude", f.exclude, "ISO3 codes left out of the second aggregate row")
      ->delimiter(',');
  cmd.add_flag("--no-exclude", f.no_exclude, "Empty exclusion list");
}

RunConfig resolve(const Flags& f) {
  RunConfig c = f.config.empty() ? RunConfig{} : landclaim::pipeline::load_run_config(f.config);
  if (!f.extract.empty()) c.extract = f.extract;
  if (!f.boundaries.empty()) c.boundaries = f.boundaries;
  if (!f.reference.empty()) c.reference = f.reference;
  if (!f.out.empty()) c.out_dir = f.out;
  if (!f.cache.empty()) c.cache_dir = f.cache;
  if (!f.endpoint.empty()) c.endpoint = f.endpoint;
  if (!f.spacing.empty()) c.scenario.spacings_m = f.spacing;
  if (!f.coverage.empty()) c.scenario.pv.coverages = f.coverage;
  if (f.top_n) c.top_n = *f.top_n;
  if (!f.exclude.empty()) c.exclude = f.exclude;
  if (f.no_exclude) c.exclude.clear();
  return c;
}

int run(Stage stage, const Flags& flags) {
  const RunConfig config = resolve(flags);
  const auto manifest = landclaim::pipeline::run_pipeline(config, stage);
  for (const auto& t : manifest.tasks) {
    std::cout << fmt::format("{:<14} {:<8} {}\n", t.name, to_string(t.status),
                             t.key.substr(0, 12));
  }
  if (manifest.ok()) {
    std::cout << fmt::format("wrote {} file(s) to {}\n", manifest.published.size() + 1,
                             config.out_dir.string());
    return 0;
  }
  std::cerr << "task failures:\n";
  for (const auto& t : manifest.tasks) {
    if (t.status == landclaim::pipeline::TaskStatus::failed ||
        t.status == landclaim::pipeline::TaskStatus::blocked) {
      std::cerr << fmt::format("  {:<14} {:<8} {}\n", t.name, to_string(t.status), t.error);
    }
  }
  return kExitTaskFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golf-course land use and renewable potential pipeline", "landclaim"};
  app.require_subcommand(1);

  Flags flags;
  Stage stage = Stage::run;
  const std::vector<std::pair<Stage, const char*>> stages = {
      {Stage::fetch, "Download the golf-course extract from Overpass"},
      {Stage::ingest, "Parse and assemble course polygons"},
      {Stage::stats, "Assign courses to countries and compute area statistics"},
      {Stage::place, "Place turbines for every configured spacing"},
      {Stage::potential, "PV and wind potential against reference capacity"},
      {Stage::report, "Write CSV, GeoJSON and SVG reports"},
      {Stage::run, "Run the full pipeline"},
  };
  const char* names[] = {"fetch", "ingest", "stats", "place", "potential", "report", "run"};
  for (std::size_t i = 0; i < stages.size(); ++i) {
    CLI::App* cmd = app.add_subcommand(names[i], stages[i].second);
    add_flags(*cmd, flags);
    cmd->callback([&stage, s = stages[i].first] { stage = s; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    return run(stage, flags);
  } catch (const landclaim::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTaskFailure;
  }
}
