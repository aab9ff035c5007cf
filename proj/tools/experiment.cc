// Copyright 2026 The vrcell Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "vrcell/error.h"
#include "vrcell/metrics.h"

namespace vrcell::tools {
namespace {

constexpr std::pair<SweepAxis, std::string_view> kAxisNames[] = {
    {SweepAxis::kNone, "none"},
    {SweepAxis::kUsers, "n_users"},
    {SweepAxis::kCells, "n_cells"},
    {SweepAxis::kViews, "n_views"},
    {SweepAxis::kCacheSize, "cache_size"},
    {SweepAxis::kViewsPerUser, "views_per_user"},
    {SweepAxis::kEvaP, "eva_p"},
    {SweepAxis::kRbBudget, "rb_budget"},
};

[[noreturn]] void ParseFail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kDomain, message);
}

int AsCount(double value, const char* what) {
  if (value != std::floor(value) || value < 0 || value > 1e9) {
    throw Error(ErrorCode::kDomain,
                std::string(what) + " must be a non-negative integer");
  }
  return static_cast<int>(value);
}

std::vector<double> Range(double first, double last, double step) {
  std::vector<double> out;
  for (double v = first; v <= last + 1e-9; v += step) out.push_back(v);
  return out;
}

void CheckKeys(const Json& json, std::initializer_list<std::string_view> known,
               const std::string& where) {
  if (!json.is_object()) ParseFail(where + " must be an object");
  for (const auto& item : json.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      ParseFail("unknown field '" + item.key() + "' in " + where);
    }
  }
}

template <typename T>
void Read(const Json& json, const char* key, T* out) {
  auto it = json.find(key);
  if (it == json.end()) return;
  try {
    *out = it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    ParseFail(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
void ReadOptional(const Json& json, const char* key, std::optional<T>* out) {
  auto it = json.find(key);
  if (it == json.end()) return;
  if (it->is_null()) {
    out->reset();
    return;
  }
  T value{};
  Read(json, key, &value);
  *out = value;
}

template <typename T>
Json OptionalJson(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ExperimentConfig SmallScale() {
  ExperimentConfig config;
  config.name = "small";
  config.params.bb_node_budget = 1'000'000;
  config.seeds = SeedRange(1, 20);
  return config;
}

ExperimentConfig LargeScale() {
  ExperimentConfig config;
  config.name = "large";
  config.scenario.topology.n_users = 500;
  config.scenario.topology.n_cells = 100;
  config.scenario.n_views = 20;
  config.solvers = {"elva", "eva", "sinr"};
  config.seeds = SeedRange(1, 5);
  return config;
}

}  // namespace

std::string_view SweepAxisName(SweepAxis axis) {
  for (const auto& [a, name] : kAxisNames) {
    if (a == axis) return name;
  }
  return "none";
}

SweepAxis ParseSweepAxis(std::string_view name) {
  for (const auto& [axis, n] : kAxisNames) {
    if (n == name) return axis;
  }
  ParseFail("unknown sweep axis '" + std::string(name) + "'");
}

std::vector<uint64_t> SeedRange(uint64_t first, int count) {
  std::vector<uint64_t> seeds;
  for (int n = 0; n < count; ++n) seeds.push_back(first + n);
  return seeds;
}

void ExperimentConfig::Validate() const {
  Require(!values.empty(), "sweep values must not be empty");
  Require(!seeds.empty(), "seed list must not be empty");
  Require(std::set<uint64_t>(seeds.begin(), seeds.end()).size() == seeds.size(),
          "seeds must be distinct");
  Require(!modes.empty(), "mode list must not be empty");
  Require(!solvers.empty(), "solver list must not be empty");
  for (const std::string& solver : solvers) {
    const auto& names = SolverNames();
    if (std::find(names.begin(), names.end(), solver) == names.end()) {
      throw Error(ErrorCode::kDomain, "unknown solver '" + solver + "'");
    }
  }
  if (axis == SweepAxis::kNone) {
    Require(values.size() == 1, "a sweep without an axis takes one value");
  }
  for (double v : values) {
    ScenarioAt(v).Validate();
    const SolverParams p = ParamsAt(v, modes.front());
    Require(p.eva_p >= 0, "eva_p must be >= 0");
    Require(!p.bb_node_budget || *p.bb_node_budget > 0,
            "bb_node_budget must be positive");
    Require(p.bruteforce_cap > 0, "bruteforce_cap must be positive");
  }
}

ScenarioConfig ExperimentConfig::ScenarioAt(double value) const {
  ScenarioConfig s = scenario;
  switch (axis) {
    case SweepAxis::kUsers:
      s.topology.n_users = AsCount(value, "n_users");
      break;
    case SweepAxis::kCells:
      s.topology.n_cells = AsCount(value, "n_cells");
      break;
    case SweepAxis::kViews:
      s.n_views = AsCount(value, "n_views");
      break;
    case SweepAxis::kCacheSize:
      s.cache_size = AsCount(value, "cache_size");
      break;
    case SweepAxis::kViewsPerUser:
      s.views_per_user = AsCount(value, "views_per_user");
      break;
    case SweepAxis::kRbBudget:
      s.rb_budget = AsCount(value, "rb_budget");
      break;
    case SweepAxis::kNone:
    case SweepAxis::kEvaP:
      break;
  }
  return s;
}

SolverParams ExperimentConfig::ParamsAt(double value, Mode mode) const {
  SolverParams p = params;
  p.mode = mode;
  if (axis == SweepAxis::kEvaP) p.eva_p = value;
  return p;
}

const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> kNames = {
      "small", "large", "fig3",  "fig4",   "fig6",   "fig7",
      "fig8",  "fig9",  "fig10", "fig10a", "fig10b", "fig10c"};
  return kNames;
}

ExperimentConfig Preset(std::string_view name) {
  ExperimentConfig config;
  if (name == "small") return SmallScale();
  if (name == "large" || name == "fig10") {
    config = LargeScale();
  } else if (name.starts_with("fig10")) {
    config = LargeScale();
    if (name == "fig10a") {
      config.axis = SweepAxis::kViews;
      config.values = Range(5, 40, 5);
    } else if (name == "fig10b") {
      config.axis = SweepAxis::kCells;
      config.values = Range(50, 150, 25);
    } else if (name == "fig10c") {
      config.axis = SweepAxis::kUsers;
      config.values = Range(100, 1000, 100);
    } else {
      ParseFail("unknown preset '" + std::string(name) + "'");
    }
  } else {
    config = SmallScale();
    if (name == "fig3") {
      config.axis = SweepAxis::kViews;
      config.values = Range(1, 5, 1);
    } else if (name == "fig4") {
      config.axis = SweepAxis::kViews;
      config.values = Range(1, 5, 1);
      config.modes = {Mode::kUnicast, Mode::kMulticast};
      config.scenario.shareable_fraction = 1.0;
      config.solvers = {"elva", "eva", "sinr"};
    } else if (name == "fig6") {
      config.axis = SweepAxis::kCells;
      config.values = Range(1, 10, 1);
    } else if (name == "fig7") {
      config.axis = SweepAxis::kUsers;
      config.values = Range(10, 50, 10);
    } else if (name == "fig8") {
      config.axis = SweepAxis::kEvaP;
      config.values = Range(1, 5, 1);
      config.solvers = {"elva", "eva", "sinr"};
    } else if (name == "fig9") {
      config.axis = SweepAxis::kCacheSize;
      config.values = Range(1, 10, 1);
      config.scenario.n_views = 10;
      config.scenario.views_per_user = 2;
    } else {
      ParseFail("unknown preset '" + std::string(name) + "'");
    }
  }
  config.name = std::string(name);
  return config;
}

Json ToJson(const ExperimentConfig& config) {
  const ScenarioConfig& s = config.scenario;
  Json modes = Json::array();
  for (Mode m : config.modes) modes.push_back(ModeName(m));
  return Json{
      {"schema", "vrcell.experiment"},
      {"version", kSchemaVersion},
      {"name", config.name},
      {"scenario",
       {{"kind", TopologyKindName(s.topology.kind)},
        {"n_users", s.topology.n_users},
        {"n_cells", s.topology.n_cells},
        {"n_views", s.n_views},
        {"cache_size", OptionalJson(s.cache_size)},
        {"views_per_user", OptionalJson(s.views_per_user)},
        {"popularity_skew", s.popularity_skew},
        {"map_radius_m", s.topology.map_radius_m},
        {"hotspot_sigma_m", s.topology.hotspot_sigma_m},
        {"rb_budget", s.rb_budget},
        {"basic_bits", s.basic_bits},
        {"view_bits", s.view_bits},
        {"pool_interference", s.pool_interference},
        {"system_bandwidth_hz", s.system_bandwidth_hz},
        {"shareable_fraction", OptionalJson(s.shareable_fraction)},
        {"max_redraws", s.max_redraws},
        {"channel", ToJson(s.channel)}}},
      {"modes", modes},
      {"solvers", config.solvers},
      {"solver_params",
       {{"eva_p", config.params.eva_p},
        {"elva_t", OptionalJson(config.params.elva_t)},
        {"bb_node_budget", OptionalJson(config.params.bb_node_budget)},
        {"bb_warm_start", config.params.bb_warm_start},
        {"bruteforce_cap", config.params.bruteforce_cap}}},
      {"sweep",
       {{"axis", SweepAxisName(config.axis)}, {"values", config.values}}},
      {"seeds", config.seeds},
      {"output", {{"csv", config.csv_path}, {"report", config.report_path}}}};
}

ExperimentConfig ConfigFromJson(const Json& json,
                                const ExperimentConfig& base) {
  CheckKeys(json,
            {"schema", "version", "preset", "name", "scenario", "modes",
             "solvers", "solver_params", "sweep", "seeds", "output"},
            "experiment config");
  if (json.contains("schema")) CheckDocument(json, "vrcell.experiment");
  ExperimentConfig config = base;
  if (json.contains("preset")) {
    std::string preset;
    Read(json, "preset", &preset);
    config = Preset(preset);
  }
  Read(json, "name", &config.name);
  if (auto it = json.find("scenario"); it != json.end()) {
    const Json& s = *it;
    CheckKeys(s,
              {"kind", "n_users", "n_cells", "n_views", "cache_size",
               "views_per_user", "popularity_skew", "map_radius_m",
               "hotspot_sigma_m", "rb_budget", "basic_bits", "view_bits",
               "pool_interference", "system_bandwidth_hz",
               "shareable_fraction", "max_redraws", "channel"},
              "scenario");
    ScenarioConfig& sc = config.scenario;
    if (s.contains("kind")) {
      std::string kind;
      Read(s, "kind", &kind);
      sc.topology.kind = ParseTopologyKind(kind);
    }
    Read(s, "n_users", &sc.topology.n_users);
    Read(s, "n_cells", &sc.topology.n_cells);
    Read(s, "n_views", &sc.n_views);
    ReadOptional(s, "cache_size", &sc.cache_size);
    ReadOptional(s, "views_per_user", &sc.views_per_user);
    Read(s, "popularity_skew", &sc.popularity_skew);
    Read(s, "map_radius_m", &sc.topology.map_radius_m);
    Read(s, "hotspot_sigma_m", &sc.topology.hotspot_sigma_m);
    Read(s, "rb_budget", &sc.rb_budget);
    Read(s, "basic_bits", &sc.basic_bits);
    Read(s, "view_bits", &sc.view_bits);
    Read(s, "pool_interference", &sc.pool_interference);
    Read(s, "system_bandwidth_hz", &sc.system_bandwidth_hz);
    ReadOptional(s, "shareable_fraction", &sc.shareable_fraction);
    Read(s, "max_redraws", &sc.max_redraws);
    if (s.contains("channel")) {
      sc.channel = ChannelParamsFromJson(s["channel"], sc.channel);
    }
  }
  if (json.contains("modes")) {
    std::vector<std::string> names;
    Read(json, "modes", &names);
    config.modes.clear();
    for (const auto& n : names) config.modes.push_back(ParseMode(n));
  }
  Read(json, "solvers", &config.solvers);
  if (auto it = json.find("solver_params"); it != json.end()) {
    const Json& p = *it;
    CheckKeys(p,
              {"eva_p", "elva_t", "bb_node_budget", "bb_warm_start",
               "bruteforce_cap"},
              "solver_params");
    Read(p, "eva_p", &config.params.eva_p);
    ReadOptional(p, "elva_t", &config.params.elva_t);
    ReadOptional(p, "bb_node_budget", &config.params.bb_node_budget);
    Read(p, "bb_warm_start", &config.params.bb_warm_start);
    Read(p, "bruteforce_cap", &config.params.bruteforce_cap);
  }
  if (auto it = json.find("sweep"); it != json.end()) {
    CheckKeys(*it, {"axis", "values"}, "sweep");
    if (it->contains("axis")) {
      std::string axis;
      Read(*it, "axis", &axis);
      config.axis = ParseSweepAxis(axis);
    }
    Read(*it, "values", &config.values);
  }
  Read(json, "seeds", &config.seeds);
  if (auto it = json.find("output"); it != json.end()) {
    CheckKeys(*it, {"csv", "report"}, "output");
    Read(*it, "csv", &config.csv_path);
    Read(*it, "report", &config.report_path);
  }
  return config;
}

void ApplySeedOverride(ExperimentConfig* config, const char* value) {
  if (value == nullptr || *value == '\0') return;
  char* end = nullptr;
  const unsigned long long first = std::strtoull(value, &end, 10);
  if (*end != '\0' || value[0] == '-') {
    ParseFail("VRCELL_SEED must be a non-negative integer, got '" +
              std::string(value) + "'");
  }
  config->seeds =
      SeedRange(first, static_cast<int>(config->seeds.size()));
}

namespace {

struct CellKey {
  double value;
  uint64_t seed;
};

struct CellOutput {
  std::vector<SweepRow> rows;
  Json report;
};

CellOutput RunCell(const ExperimentConfig& config, const CellKey& key) {
  CellOutput out;
  out.report = Json{{"value", key.value}, {"seed", key.seed}};
  auto fail_all = [&](Mode mode, const std::string& message) {
    for (const std::string& solver : config.solvers) {
      SweepRow row;
      row.value = key.value;
      row.seed = key.seed;
      row.mode = mode;
      row.solver = solver;
      row.error = message;
      out.rows.push_back(std::move(row));
    }
  };

  std::optional<Scenario> scenario;
  try {
    scenario = AssembleScenario(config.ScenarioAt(key.value), key.seed);
  } catch (const Error& e) {
    out.report["status"] = "error";
    out.report["error"] = e.what();
    for (Mode mode : config.modes) fail_all(mode, e.what());
    return out;
  }
  const Instance& instance = scenario->instance;
  out.report["status"] = "ok";
  out.report["redraws"] = scenario->redraws;
  out.report["interference_load"] = scenario->channel.interference_load;
  out.report["modes"] = Json::array();

  for (Mode mode : config.modes) {
    const SolverParams params = config.ParamsAt(key.value, mode);
    std::map<std::string, SolveResult> results;
    std::map<std::string, std::string> errors;
    Json reports = Json::array();
    for (const std::string& solver : config.solvers) {
      try {
        SolveResult result = RunSolver(solver, instance, params);
        reports.push_back(ToJson(result.report));
        results.emplace(solver, std::move(result));
      } catch (const Error& e) {
        errors[solver] = e.what();
        reports.push_back(Json{{"solver", solver}, {"error", e.what()}});
      }
    }
    const RunSummary summary = Summarize(instance, results, mode);
    for (const std::string& solver : config.solvers) {
      SweepRow row;
      row.value = key.value;
      row.seed = key.seed;
      row.mode = mode;
      row.solver = solver;
      if (auto err = errors.find(solver); err != errors.end()) {
        row.error = err->second;
        out.rows.push_back(std::move(row));
        continue;
      }
      const auto s = std::find_if(
          summary.solvers.begin(), summary.solvers.end(),
          [&](const SolverSummary& x) { return x.solver == solver; });
      const SolverReport& report = results.at(solver).report;
      row.ok = true;
      row.objective = s->objective;
      row.gap = s->gap;
      row.jain = s->jain;
      row.mean_utilization = s->mean_utilization;
      row.wall_time_s = s->wall_time_s;
      row.nodes_explored = report.nodes_explored;
      row.node_budget_hit = report.node_budget_hit;
      row.feasible = s->feasible;
      out.rows.push_back(std::move(row));
    }
    out.report["modes"].push_back(
        Json{{"mode", ModeName(mode)},
             {"summary", ToJson(summary)},
             {"reports", std::move(reports)}});
  }
  return out;
}

}  // namespace

SweepResult RunSweep(const ExperimentConfig& config, int jobs) {
  config.Validate();
  std::vector<CellKey> keys;
  for (double value : config.values) {
    for (uint64_t seed : config.seeds) keys.push_back({value, seed});
  }
  std::vector<CellOutput> outputs(keys.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t n = next++; n < keys.size(); n = next++) {
      outputs[n] = RunCell(config, keys[n]);
    }
  };
  jobs = std::clamp(jobs, 1, static_cast<int>(std::max<size_t>(keys.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  SweepResult result;
  result.report = Json{{"schema", "vrcell.sweep"},
                       {"version", kSchemaVersion},
                       {"config", ToJson(config)},
                       {"cells", Json::array()}};
  for (CellOutput& out : outputs) {
    for (SweepRow& row : out.rows) result.rows.push_back(std::move(row));
    result.report["cells"].push_back(std::move(out.report));
  }
  return result;
}

const std::vector<std::string>& CsvColumns() {
  static const std::vector<std::string> kColumns = {
      "experiment", "axis",          "value",
      "seed",       "mode",          "solver",
      "status",     "objective",     "gap",
      "jain",       "mean_utilization", "wall_time_s",
      "nodes_explored", "node_budget_hit", "feasible",
      "error"};
  return kColumns;
}

void WriteCsv(const ExperimentConfig& config, const std::vector<SweepRow>& rows,
              std::ostream& out) {
  const auto& columns = CsvColumns();
  for (size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "," : "") << columns[c];
  }
  out << '\n';
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatNumber(*v) : std::string();
  };
  for (const SweepRow& row : rows) {
    out << CsvField(config.name) << ',' << SweepAxisName(config.axis) << ','
        << FormatNumber(row.value) << ',' << row.seed << ','
        << ModeName(row.mode) << ',' << row.solver << ','
        << (row.ok ? "ok" : "error") << ',';
    if (row.ok) {
      out << FormatNumber(row.objective) << ',' << opt(row.gap) << ','
          << opt(row.jain) << ',' << FormatNumber(row.mean_utilization) << ','
          << FormatNumber(row.wall_time_s) << ',' << row.nodes_explored << ','
          << (row.node_budget_hit ? 1 : 0) << ',' << (row.feasible ? 1 : 0)
          << ',';
    } else {
      out << ",,,,,,,,";
    }
    out << CsvField(row.error) << '\n';
  }
}

}  // namespace vrcell::tools
