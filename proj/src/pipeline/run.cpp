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

#include "landclaim/pipeline/run.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "landclaim/aggregate/boundaries.hpp"
#include "landclaim/aggregate/comparison.hpp"
#include "landclaim/aggregate/reference.hpp"
#include "landclaim/aggregate/stats.hpp"
#include "landclaim/csv.hpp"
#include "landclaim/error.hpp"
#include "landclaim/ingest/assemble.hpp"
#include "landclaim/ingest/fetch.hpp"
#include "landclaim/ingest/overpass_parser.hpp"
#include "landclaim/io.hpp"
#include "landclaim/parallel/kernels.hpp"
#include "landclaim/pipeline/artifacts.hpp"
#include "landclaim/pipeline/reports.hpp"
#include "landclaim/pipeline/svg_chart.hpp"

namespace landclaim::pipeline {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string place_task_name(double spacing_m) { return fmt::format("place_{:g}", spacing_m); }

std::vector<double> spacings_descending(const ScenarioConfig& scenario) {
  std::vector<double> out = scenario.spacings_m;
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (double v : values) out += fmt::format("{:.17g};", v);
  return out;
}

std::optional<double> parse_optional(const std::string& field) {
  if (field == "NA") return std::nullopt;
  return std::stod(field);
}

std::vector<aggregate::PotentialComparison> potential_from_csv(std::string_view text) {
  std::vector<aggregate::PotentialComparison> rows;
  std::size_t pos = text.find('\n');
  while (pos != std::string_view::npos && pos + 1 < text.size()) {
    const std::size_t end = text.find('\n', pos + 1);
    const std::string_view line = text.substr(pos + 1, end - pos - 1);
    pos = end;
    if (line.empty()) continue;
    const auto f = csv::split_record(line);
    if (f.size() != 7) throw ParseError("malformed potential.csv row", 0);
    aggregate::PotentialComparison r;
    r.iso3 = f[0];
    r.technology = aggregate::technology_from(f[1]);
    r.scenario = f[2];
    r.potential_mw = std::stod(f[3]);
    r.installed_2023_mw = parse_optional(f[4]);
    r.projected_2028_mw = parse_optional(f[5]);
    if (f[6] != "NA") r.meets_2028 = f[6] == "true";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string turbines_csv(const aggregate::StatsReport& stats,
                         const std::vector<std::vector<placement::PlacementResult>>& by_spacing,
                         const std::vector<double>& spacings,
                         const std::map<std::string, std::string>& country_of) {
  std::string out = "iso3,spacing_m,courses,turbines,mean_turbines_per_course,capacity_mw\n";
  for (const auto& c : stats.countries) {
    for (std::size_t s = 0; s < spacings.size(); ++s) {
      std::size_t turbines = 0;
      double mw = 0.0;
      for (const auto& r : by_spacing[s]) {
        auto it = country_of.find(r.course_id);
        if (it == country_of.end() || it->second != c.iso3) continue;
        turbines += r.count;
        mw += r.capacity_mw;
      }
      const double mean = c.course_count
                              ? static_cast<double>(turbines) / static_cast<double>(c.course_count)
                              : 0.0;
      out += fmt::format("{},{},{},{},{},{}\n", c.iso3, csv::fixed6(spacings[s]), c.course_count,
                         turbines, csv::fixed6(mean), csv::fixed6(mw));
    }
  }
  return out;
}

void build_graph(TaskGraph& graph, const RunConfig& config, bool force_fetch) {
  const ScenarioConfig& sc = config.scenario;
  const std::vector<double> spacings = spacings_descending(sc);
  const bool fetch = force_fetch || config.extract.empty();

  if (fetch) {
    const std::string query(config.query.empty() ? ingest::kGolfCourseQuery : config.query);
    const std::string endpoint = ingest::resolve_endpoint(config.endpoint);
    const fs::path cache = config.cache_dir;
    graph.add({"fetch", {}, {}, "endpoint=" + endpoint + "\nquery=" + query,
               [query, endpoint, cache](TaskContext& ctx) {
                 const fs::path raw = ingest::fetch_overpass(query, endpoint, cache);
                 fs::copy_file(raw, ctx.output("extract.json"));
               }});
  }

  TaskSpec ingest_task{"ingest", {}, {}, "", nullptr};
  if (fetch) {
    ingest_task.deps = {"fetch"};
  } else {
    ingest_task.files["extract"] = config.extract;
  }
  ingest_task.run = [fetch](TaskContext& ctx) {
    const fs::path& extract = ctx.input(fetch ? "fetch/extract.json" : "extract");
    auto parsed = ingest::parse_overpass_file(extract);
    auto assembled = ingest::assemble_course_features(parsed.elements);
    std::vector<ingest::SkipRecord> skipped = std::move(parsed.skipped);
    skipped.insert(skipped.end(), assembled.skipped.begin(), assembled.skipped.end());
    std::stable_sort(skipped.begin(), skipped.end(), [](const auto& a, const auto& b) {
      return std::tie(a.element_kind, a.element_id) < std::tie(b.element_kind, b.element_id);
    });
    std::size_t tagged = 0;
    for (const auto& e : parsed.elements) tagged += e.has_tag("leisure", "golf_course");
    json summary = {{"elements", parsed.elements.size()},
                    {"tagged_elements", tagged},
                    {"features", assembled.features.size()},
                    {"skipped", skipped.size()}};
    write_file_atomic(ctx.output("features.json"), features_to_json(assembled.features));
    write_file_atomic(ctx.output("skip_report.csv"), skip_report_csv(skipped));
    write_file_atomic(ctx.output("ingest_summary.json"), summary.dump(2) + "\n");
  };
  graph.add(std::move(ingest_task));

  graph.add({"stats", {"ingest"}, {{"boundaries", config.boundaries}}, "", [](TaskContext& ctx) {
               const auto features = features_from_json(read_file(ctx.input("ingest/features.json")));
               aggregate::CountryIndex index(
                   aggregate::load_boundaries_geojson(ctx.input("boundaries")));
               const auto iso3 = parallel::assign_all(features, index);
               const auto stats = aggregate::country_stats(features, iso3, index.boundaries());
               write_file_atomic(ctx.output("assignments.csv"), assignments_to_csv(features, iso3));
               write_file_atomic(ctx.output("stats.json"), stats_to_json(stats));
               write_file_atomic(ctx.output("country_stats.csv"), country_stats_csv(stats));
             }});

  std::vector<std::string> place_tasks;
  for (double s : spacings) {
    const placement::PlacementConfig pc{s, sc.guarantee_one};
    const placement::TurbineSpec spec = sc.turbine;
    const std::string params =
        fmt::format("spacing_m={:.17g}\nguarantee_one={}\nrated_power_mw={:.17g}", s,
                    pc.guarantee_one, spec.rated_power_mw);
    place_tasks.push_back(place_task_name(s));
    graph.add({place_tasks.back(), {"ingest"}, {}, params, [pc, spec](TaskContext& ctx) {
                 const auto features =
                     features_from_json(read_file(ctx.input("ingest/features.json")));
                 const auto results = parallel::place_all(features, pc, spec);
                 write_file_atomic(ctx.output(placements_file_name(pc.spacing_m)),
                                   placements_to_geojson(results, spec.rated_power_mw));
               }});
  }

  const fs::path reference = config.reference.empty() ? default_reference_path() : config.reference;
  const aggregate::ComparisonOptions options{config.top_n, config.exclude};
  std::vector<std::string> potential_deps{"stats"};
  potential_deps.insert(potential_deps.end(), place_tasks.begin(), place_tasks.end());
  std::string exclude_text;
  for (const auto& e : options.exclude) exclude_text += e + ";";
  const std::string potential_params = fmt::format(
      "spacings={}\ncoverages={}\ndensity={:.17g}\npv_km2_per_mw={:.17g}\n"
      "wind_km2_per_mw={:.17g}\npv_comparison_km2_per_mw={:.17g}\ntop_n={}\nexclude={}",
      format_list(spacings), format_list(sc.pv.coverages), sc.pv.density_mw_per_km2,
      sc.equivalence.pv_km2_per_mw, sc.equivalence.wind_km2_per_mw,
      sc.equivalence.pv_comparison_km2_per_mw, options.top_n, exclude_text);
  graph.add({"potential", potential_deps, {{"reference", reference}}, potential_params,
             [spacings, sc, options](TaskContext& ctx) {
               const auto stats = stats_from_json(read_file(ctx.input("stats/stats.json")));
               const auto country_of =
                   assignments_from_csv(read_file(ctx.input("stats/assignments.csv")));
               const auto reference = aggregate::ReferenceTable::load_csv(ctx.input("reference"));
               std::vector<std::vector<placement::PlacementResult>> by_spacing;
               std::vector<aggregate::WindTotals> wind;
               for (double s : spacings) {
                 by_spacing.push_back(placements_from_geojson(read_file(ctx.input(
                     place_task_name(s) + "/" + placements_file_name(s)))));
                 wind.push_back(aggregate::wind_by_country(s, by_spacing.back(), country_of));
               }
               const auto rows =
                   aggregate::scenario_comparison(stats, wind, sc.pv, reference, options);
               const auto equivalence = aggregate::equivalence_table(
                   stats, reference, sc.equivalence.pv_comparison_km2_per_mw, options.top_n);
               write_file_atomic(ctx.output("potential.csv"), potential_csv(rows));
               write_file_atomic(ctx.output("equivalence.csv"), equivalence_csv(equivalence));
               write_file_atomic(ctx.output("turbines_per_country.csv"),
                                 turbines_csv(stats, by_spacing, spacings, country_of));
             }});

  std::vector<std::string> report_deps{"ingest", "stats", "potential"};
  report_deps.insert(report_deps.end(), place_tasks.begin(), place_tasks.end());
  graph.add({"report", report_deps, {}, fmt::format("top_n={}", options.top_n),
             [top_n = options.top_n](TaskContext& ctx) {
               const auto stats = stats_from_json(read_file(ctx.input("stats/stats.json")));
               const auto rows = potential_from_csv(read_file(ctx.input("potential/potential.csv")));
               write_file_atomic(ctx.output("area_by_country.svg"), area_chart_svg(stats, top_n));
               write_file_atomic(ctx.output("pv_potential.svg"),
                                 potential_chart_svg(rows, aggregate::Technology::pv_utility,
                                                     "Utility-scale PV potential on golf courses"));
               write_file_atomic(ctx.output("wind_potential.svg"),
                                 potential_chart_svg(rows, aggregate::Technology::wind_onshore,
                                                     "Onshore wind potential on golf courses"));
               for (const std::string label :
                    {"ingest/skip_report.csv", "stats/country_stats.csv", "potential/potential.csv",
                     "potential/equivalence.csv", "potential/turbines_per_country.csv"}) {
                 fs::copy_file(ctx.input(label), ctx.output(fs::path(label).filename().string()));
               }
               for (const auto& label : ctx.input_labels("place_")) {
                 fs::copy_file(ctx.input(label), ctx.output(fs::path(label).filename().string()));
               }
             }});
}

std::vector<std::string> targets_for(Stage stage, const RunConfig& config) {
  switch (stage) {
    case Stage::fetch: return {"fetch"};
    case Stage::ingest: return {"ingest"};
    case Stage::stats: return {"stats"};
    case Stage::place: {
      std::vector<std::string> out;
      for (double s : spacings_descending(config.scenario)) out.push_back(place_task_name(s));
      return out;
    }
    case Stage::potential: return {"potential"};
    case Stage::report:
    case Stage::run: return {"report"};
  }
  return {"report"};
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

bool RunManifest::ok() const {
  return std::all_of(tasks.begin(), tasks.end(), [](const TaskRecord& t) {
    return t.status == TaskStatus::ran || t.status == TaskStatus::cached;
  });
}

RunManifest run_pipeline(const RunConfig& config, Stage target) {
  config.validate();
  TaskGraph graph(config.cache_dir);
  build_graph(graph, config, target == Stage::fetch);
  const std::vector<std::string> targets = targets_for(target, config);

  RunManifest manifest;
  manifest.created_utc = utc_now();
  manifest.tasks = graph.run(targets);

  std::map<std::string, std::string> files;
  for (const auto& rec : manifest.tasks) {
    if (std::find(targets.begin(), targets.end(), rec.name) == targets.end()) continue;
    if (rec.status != TaskStatus::ran && rec.status != TaskStatus::cached) continue;
    for (const auto& [file, hash] : rec.output_hashes) {
      files[file] = read_file(rec.output_dir / file);
    }
  }
  for (const auto& [file, content] : files) manifest.published.push_back(file);

  // Files published by the previous run that this run no longer produces.
  std::vector<std::string> stale;
  const fs::path previous = config.out_dir / "manifest.json";
  if (fs::is_regular_file(previous)) {
    try {
      const json old = json::parse(read_file(previous));
      for (const auto& f : old.at("published")) {
        const std::string name = f.get<std::string>();
        if (!files.count(name) && fs::path(name).filename() == name) stale.push_back(name);
      }
    } catch (const std::exception&) {
      stale.clear();
    }
  }

  files["manifest.json"] = manifest_json(manifest);
  write_reports(files, config.out_dir);
  for (const auto& name : stale) {
    std::error_code ec;
    fs::remove(config.out_dir / name, ec);
  }
  return manifest;
}

std::string manifest_json(const RunManifest& manifest) {
  json tasks = json::array();
  for (const auto& t : manifest.tasks) {
    tasks.push_back({{"name", t.name},
                     {"key", t.key},
                     {"status", std::string(to_string(t.status))},
                     {"inputs", t.input_hashes},
                     {"outputs", t.output_hashes},
                     {"error", t.error}});
  }
  json doc = {{"created_utc", manifest.created_utc},
              {"ok", manifest.ok()},
              {"tasks", tasks},
              {"published", manifest.published}};
  return doc.dump(2) + "\n";
}

}  // namespace landclaim::pipeline
