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

#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "landclaim/error.hpp"
#include "landclaim/io.hpp"
#include "landclaim/pipeline/run.hpp"

using namespace landclaim;
using namespace landclaim::pipeline;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

RunConfig config_for(const testing::SyntheticWorld& w, const fs::path& dir) {
  RunConfig c;
  c.extract = w.extract;
  c.boundaries = w.boundaries;
  c.reference = w.reference;
  c.out_dir = dir / "out";
  c.cache_dir = dir / "cache";
  c.exclude = {"AAA"};
  return c;
}

std::map<std::string, std::string> data_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name != "manifest.json") out[name] = read_file(e.path());
  }
  return out;
}

std::map<std::string, TaskStatus> statuses(const RunManifest& m) {
  std::map<std::string, TaskStatus> out;
  for (const auto& t : m.tasks) out[t.name] = t.status;
  return out;
}

int run_cli(const std::string& args) {
  const int rc = std::system((std::string(LANDCLAIM_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("full run, rerun and changed spacing") {
  const auto dir = testing::temp_dir("run");
  const auto world = testing::write_synthetic_world(dir / "in");
  RunConfig cfg = config_for(world, dir);

  const auto first = run_pipeline(cfg);
  REQUIRE(first.ok());
  CHECK(first.tasks.size() == 7);
  for (const auto& t : first.tasks) CHECK(t.status == TaskStatus::ran);

  const auto files = data_files(cfg.out_dir);
  for (const char* f : {"country_stats.csv", "potential.csv", "equivalence.csv",
                        "turbines_per_country.csv", "skip_report.csv", "placements_500.geojson",
                        "placements_1000.geojson", "placements_1500.geojson",
                        "area_by_country.svg", "pv_potential.svg", "wind_potential.svg"}) {
    CHECK_MESSAGE(files.count(f), f);
  }

  SUBCASE("country stats") {
    const std::string stats = files.at("country_stats.csv");
    CHECK(stats.find("AAA,Aland,12,") != std::string::npos);
    CHECK(stats.find("BBB,Bland,11,") != std::string::npos);
    CHECK(stats.find("CCC,Cland,10,") != std::string::npos);
    CHECK(stats.find("AAA") < stats.find("BBB"));
  }

  SUBCASE("placements match turbine counts") {
    const auto geo = json::parse(files.at("placements_500.geojson"));
    std::size_t from_table = 0;
    const std::string table = files.at("turbines_per_country.csv");
    std::size_t pos = table.find('\n');
    while ((pos = table.find(",500.000000,", pos)) != std::string::npos) {
      const std::size_t a = table.find(',', pos + 12) + 1;
      const std::size_t b = table.find(',', a);
      from_table += std::stoul(table.substr(a, b - a));
      pos = b;
    }
    // The single-turbine course at sea is unassigned.
    CHECK(geo["features"].size() == from_table + 1);
  }

  SUBCASE("second run is cached and byte-identical") {
    const auto second = run_pipeline(cfg);
    for (const auto& t : second.tasks) CHECK(t.status == TaskStatus::cached);
    CHECK(data_files(cfg.out_dir) == files);
    const auto manifest = json::parse(read_file(cfg.out_dir / "manifest.json"));
    CHECK(manifest["ok"] == true);
    for (const auto& t : manifest["tasks"]) CHECK(t["status"] == "cached");
  }

  SUBCASE("fresh cache gives the same bytes") {
    RunConfig other = cfg;
    other.cache_dir = dir / "cache2";
    other.out_dir = dir / "out2";
    run_pipeline(other);
    CHECK(data_files(other.out_dir) == files);
  }

  SUBCASE("changing spacings reruns only downstream tasks") {
    cfg.scenario.spacings_m = {1500, 1000, 750};
    const auto s = statuses(run_pipeline(cfg));
    CHECK(s.at("ingest") == TaskStatus::cached);
    CHECK(s.at("stats") == TaskStatus::cached);
    CHECK(s.at("place_1500") == TaskStatus::cached);
    CHECK(s.at("place_1000") == TaskStatus::cached);
    CHECK(s.at("place_750") == TaskStatus::ran);
    CHECK(s.at("potential") == TaskStatus::ran);
    CHECK(s.at("report") == TaskStatus::ran);
    CHECK(fs::exists(cfg.out_dir / "placements_750.geojson"));
    CHECK_FALSE(fs::exists(cfg.out_dir / "placements_500.geojson"));
  }

  SUBCASE("changing coverages leaves placement alone") {
    cfg.scenario.pv.coverages = {0.5};
    const auto s = statuses(run_pipeline(cfg));
    CHECK(s.at("place_500") == TaskStatus::cached);
    CHECK(s.at("potential") == TaskStatus::ran);
  }
}

TEST_CASE("missing boundaries file") {
  const auto dir = testing::temp_dir("run-missing");
  const auto world = testing::write_synthetic_world(dir / "in");
  RunConfig cfg = config_for(world, dir);
  cfg.boundaries = dir / "in" / "nope.geojson";
  const auto m = run_pipeline(cfg);
  CHECK_FALSE(m.ok());
  const auto s = statuses(m);
  CHECK(s.at("ingest") == TaskStatus::ran);
  CHECK(s.at("place_500") == TaskStatus::ran);
  CHECK(s.at("stats") == TaskStatus::failed);
  CHECK(s.at("potential") == TaskStatus::blocked);
  CHECK(s.at("report") == TaskStatus::blocked);
  CHECK(fs::exists(cfg.out_dir / "manifest.json"));
}

TEST_CASE("stage targets publish their own outputs") {
  const auto dir = testing::temp_dir("run-stage");
  const auto world = testing::write_synthetic_world(dir / "in");
  RunConfig cfg = config_for(world, dir);
  const auto m = run_pipeline(cfg, Stage::ingest);
  CHECK(m.tasks.size() == 1);
  CHECK(fs::exists(cfg.out_dir / "features.json"));
  CHECK(fs::exists(cfg.out_dir / "skip_report.csv"));
  const auto summary = json::parse(read_file(cfg.out_dir / "ingest_summary.json"));
  CHECK(summary["features"] == world.course_count);
  CHECK(summary["features"].get<std::size_t>() + summary["skipped"].get<std::size_t>() ==
        summary["tagged_elements"].get<std::size_t>());

  const auto p = run_pipeline(cfg, Stage::place);
  CHECK(p.tasks.size() == 4);
  CHECK(fs::exists(cfg.out_dir / "placements_1000.geojson"));
}

TEST_CASE("cli exit codes") {
  const auto dir = testing::temp_dir("cli");
  const auto world = testing::write_synthetic_world(dir / "in");
  const std::string common = "--extract " + world.extract.string() + " --boundaries " +
                             world.boundaries.string() + " --reference " +
                             world.reference.string() + " --cache " + (dir / "cache").string();
  CHECK(run_cli("run " + common + " --out " + (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "potential.csv"));
  CHECK(run_cli("run " + common + " --out " + (dir / "out").string() +
                " --spacing 500,250 --coverage 0.5 --top-n 2 --exclude AAA,BBB") == 0);
  CHECK(run_cli("stats " + common + " --out " + (dir / "stats").string()) == 0);
  CHECK(fs::exists(dir / "stats" / "country_stats.csv"));

  CHECK(run_cli("run " + common + " --spacing 0") == 2);
  CHECK(run_cli("run " + common + " --coverage 2") == 2);
  CHECK(run_cli("run --bogus") == 2);
  CHECK(run_cli("") == 2);
  testing::write_text(dir / "bad.json", R"({"unknown": 1})");
  CHECK(run_cli("run --config " + (dir / "bad.json").string()) == 2);

  CHECK(run_cli("run --extract " + world.extract.string() + " --boundaries /nonexistent.geojson" +
                " --cache " + (dir / "cache").string() + " --out " + (dir / "fail").string()) == 3);
  testing::write_text(dir / "broken.json", "{\"elements\":[");
  CHECK(run_cli("ingest --extract " + (dir / "broken.json").string() + " --cache " +
                (dir / "cache").string() + " --out " + (dir / "fail2").string()) == 3);

  testing::write_text(dir / "cfg.json",
                      json({{"extract", world.extract.string()},
                            {"boundaries", world.boundaries.string()},
                            {"reference", world.reference.string()},
                            {"spacings_m", {1000}},
                            {"out", (dir / "cfg-out").string()},
                            {"cache", (dir / "cache").string()}})
                          .dump());
  CHECK(run_cli("run --config " + (dir / "cfg.json").string()) == 0);
  CHECK(fs::exists(dir / "cfg-out" / "placements_1000.geojson"));
  CHECK_FALSE(fs::exists(dir / "cfg-out" / "placements_500.geojson"));
}
