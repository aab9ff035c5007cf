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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "commands.h"
#include "experiment.h"
#include "vrcell/error.h"
#include "vrcell/scenario.h"
#include "vrcell/serialization.h"

namespace vrcell::tools {
namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("vrcell_tools_test_" + std::to_string(counter_++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Preset, SmallScaleDefaults) {
  const ExperimentConfig c = Preset("small");
  EXPECT_EQ(c.scenario.topology.n_users, 50);
  EXPECT_EQ(c.scenario.topology.n_cells, 10);
  EXPECT_EQ(c.scenario.n_views, 5);
  EXPECT_EQ(c.scenario.CacheSize(), 3);
  EXPECT_EQ(c.scenario.rb_budget, 50'000);
  EXPECT_EQ(c.scenario.basic_bits, 2e6);
  EXPECT_EQ(c.scenario.view_bits, 2e6);
  EXPECT_EQ(c.scenario.channel.fc_ghz, 5.0);
  EXPECT_EQ(c.scenario.channel.tx_power_w, 1.0);
  EXPECT_EQ(c.scenario.channel.noise_psd_dbm_hz, -174.0);
  EXPECT_EQ(c.scenario.topology.map_radius_m, 1000.0);
  EXPECT_EQ(c.seeds.size(), 20u);
  EXPECT_EQ(c.params.bb_node_budget, 1'000'000);
}

TEST(Preset, LargeScaleDefaults) {
  const ExperimentConfig c = Preset("fig10");
  EXPECT_EQ(c.scenario.topology.n_users, 500);
  EXPECT_EQ(c.scenario.topology.n_cells, 100);
  EXPECT_EQ(c.scenario.n_views, 20);
  EXPECT_EQ(c.scenario.CacheSize(), 10);
}

TEST(Preset, AllNamesValidate) {
  for (const std::string& name : PresetNames()) {
    EXPECT_NO_THROW(Preset(name).Validate()) << name;
  }
  EXPECT_THROW(Preset("fig5"), Error);
}

TEST(Preset, CacheSweepSaturatesAtOneHundred) {
  const ExperimentConfig c = Preset("fig9");
  const Scenario s = AssembleScenario(c.ScenarioAt(10), c.seeds.front());
  int reachable = 0;
  for (int i = 0; i < s.instance.n_users; ++i) {
    int best = 0;
    for (int j = 0; j < s.instance.n_cells; ++j) {
      best = std::max(best, s.instance.RewardCount(i, j));
    }
    reachable += best;
  }
  EXPECT_EQ(reachable, 100);
}

TEST(ExperimentConfig, JsonRoundTrip) {
  for (const std::string& name : PresetNames()) {
    const ExperimentConfig c = Preset(name);
    EXPECT_EQ(ToJson(ConfigFromJson(ToJson(c))), ToJson(c)) << name;
  }
}

TEST(ExperimentConfig, PartialConfigOverridesPreset) {
  const Json json = Json::parse(R"({
    "preset": "fig3",
    "scenario": {"kind": "uniform", "channel": {"shadow_sigma_db": 4}},
    "seeds": [5, 6]
  })");
  const ExperimentConfig c = ConfigFromJson(json);
  EXPECT_EQ(c.name, "fig3");
  EXPECT_EQ(c.axis, SweepAxis::kViews);
  EXPECT_EQ(c.scenario.topology.kind, TopologyKind::kUniform);
  EXPECT_EQ(c.scenario.channel.shadow_sigma_db, 4.0);
  EXPECT_EQ(c.scenario.channel.a, 36.8);
  EXPECT_EQ(c.seeds, (std::vector<uint64_t>{5, 6}));
}

TEST(ExperimentConfig, RejectsBadConfigs) {
  EXPECT_THROW(ConfigFromJson(Json{{"sead", 1}}), Error);
  EXPECT_THROW(ConfigFromJson(Json{{"sweep", {{"axis", "colour"}}}}), Error);
  ExperimentConfig c = Preset("small");
  c.seeds = {1, 1};
  EXPECT_THROW(c.Validate(), Error);
  c = Preset("fig3");
  c.values.clear();
  EXPECT_THROW(c.Validate(), Error);
  c = Preset("small");
  c.solvers = {"cvx"};
  EXPECT_THROW(c.Validate(), Error);
}

TEST(ExperimentConfig, SeedOverride) {
  ExperimentConfig c = Preset("small");
  ApplySeedOverride(&c, "100");
  EXPECT_EQ(c.seeds.front(), 100u);
  EXPECT_EQ(c.seeds.back(), 119u);
  ApplySeedOverride(&c, nullptr);
  EXPECT_EQ(c.seeds.front(), 100u);
  EXPECT_THROW(ApplySeedOverride(&c, "x1"), Error);
}

ExperimentConfig QuickSweep() {
  ExperimentConfig c = Preset("fig7");
  c.values = {10, 20};
  c.seeds = {1, 2};
  c.solvers = {"bb", "elva", "sinr"};
  c.params.bb_node_budget = 500;
  return c;
}

TEST(RunSweep, OneCellOneSolverOneRow) {
  ExperimentConfig c = Preset("small");
  c.seeds = {3};
  c.solvers = {"elva"};
  const SweepResult r = RunSweep(c);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.rows[0].ok);
  EXPECT_EQ(*r.rows[0].gap, 1.0);
}

TEST(RunSweep, ReproducibleAndOrderedUnderJobs) {
  const ExperimentConfig c = QuickSweep();
  const SweepResult a = RunSweep(c, 1);
  const SweepResult b = RunSweep(c, 3);
  ASSERT_EQ(a.rows.size(), 2u * 2u * 3u);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t n = 0; n < a.rows.size(); ++n) {
    EXPECT_EQ(a.rows[n].value, b.rows[n].value);
    EXPECT_EQ(a.rows[n].seed, b.rows[n].seed);
    EXPECT_EQ(a.rows[n].solver, b.rows[n].solver);
    EXPECT_EQ(a.rows[n].objective, b.rows[n].objective);
    EXPECT_EQ(a.rows[n].gap, b.rows[n].gap);
    EXPECT_EQ(a.rows[n].jain, b.rows[n].jain);
  }
  EXPECT_EQ(a.rows.front().solver, "bb");
  EXPECT_EQ(a.rows.back().value, 20.0);
  EXPECT_EQ(a.rows.back().seed, 2u);
}

TEST(RunSweep, FailedCellsBecomeErrorRows) {
  ExperimentConfig c = Preset("fig6");
  c.values = {1, 2};
  c.seeds = {1};
  c.solvers = {"sinr"};
  const SweepResult r = RunSweep(c);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_FALSE(r.rows[0].ok);
  EXPECT_NE(r.rows[0].error.find("do not fit"), std::string::npos);
  EXPECT_TRUE(r.rows[1].ok);
}

TEST(WriteCsv, FixedColumns) {
  ExperimentConfig c = Preset("small");
  c.seeds = {1};
  c.solvers = {"sinr", "eva"};
  std::ostringstream out;
  WriteCsv(c, RunSweep(c).rows, out);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "experiment,axis,value,seed,mode,solver,status,objective,gap,jain,"
            "mean_utilization,wall_time_s,nodes_explored,node_budget_hit,"
            "feasible,error");
  std::string row;
  int count = 0;
  while (std::getline(lines, row)) {
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 15);
    ++count;
  }
  EXPECT_EQ(count, 2);
}

TEST(Commands, GenerateIsByteIdentical) {
  TempDir dir;
  GenerateOptions g;
  g.config = Preset("small");
  g.seed = 4;
  g.out_path = dir.File("a.json");
  std::ostringstream out, err;
  ASSERT_EQ(CmdGenerate(g, out, err), kExitOk) << err.str();
  g.out_path = dir.File("b.json");
  ASSERT_EQ(CmdGenerate(g, out, err), kExitOk);
  EXPECT_EQ(Slurp(dir.File("a.json")), Slurp(dir.File("b.json")));
  const Json doc = ReadJsonFile(dir.File("a.json"));
  EXPECT_EQ(doc["instance"]["n_users"], 50);
  EXPECT_EQ(doc["instance"]["n_cells"], 10);
  EXPECT_EQ(doc["instance"]["n_views"], 5);
}

TEST(Commands, GenerateRefusesUncoverableViews) {
  GenerateOptions g;
  g.config = Preset("small");
  g.config.scenario.topology.n_cells = 2;
  g.config.scenario.cache_size = 2;
  std::ostringstream out, err;
  EXPECT_EQ(CmdGenerate(g, out, err), kExitInfeasible);
  EXPECT_NE(err.str().find("placement"), std::string::npos);
}

std::string TinyInstanceFile(const TempDir& dir) {
  GenerateOptions g;
  g.config = Preset("small");
  g.config.scenario.topology.n_users = 4;
  g.config.scenario.topology.n_cells = 2;
  g.config.scenario.n_views = 3;
  g.config.scenario.cache_size = 2;
  g.out_path = dir.File("tiny.json");
  std::ostringstream out, err;
  EXPECT_EQ(CmdGenerate(g, out, err), kExitOk) << err.str();
  return g.out_path;
}

TEST(Commands, SolveAndVerify) {
  TempDir dir;
  const std::string instance = TinyInstanceFile(dir);
  for (const std::string& solver : {"bruteforce", "bb", "elva", "eva", "sinr"}) {
    SolveOptions s;
    s.instance_path = instance;
    s.solver = solver;
    s.solution_path = dir.File(solver + ".json");
    std::ostringstream out, err;
    ASSERT_EQ(CmdSolve(s, out, err), kExitOk) << solver << err.str();
    EXPECT_EQ(Json::parse(out.str())["solver"], solver);

    VerifyOptions v;
    v.instance_path = instance;
    v.solution_path = s.solution_path;
    std::ostringstream vout, verr;
    EXPECT_EQ(CmdVerify(v, vout, verr), kExitOk) << solver << vout.str();
  }
}

TEST(Commands, SolveReportsParameters) {
  TempDir dir;
  const std::string instance = TinyInstanceFile(dir);
  SolveOptions s;
  s.instance_path = instance;
  s.solver = "eva";
  s.params.eva_p = 3;
  std::ostringstream out, err;
  ASSERT_EQ(CmdSolve(s, out, err), kExitOk);
  EXPECT_EQ(Json::parse(out.str())["params"]["p"], 3.0);

  s.solver = "bb";
  s.params.bb_node_budget = 1;
  std::ostringstream bout;
  ASSERT_EQ(CmdSolve(s, bout, err), kExitOk);
  EXPECT_EQ(Json::parse(bout.str())["node_budget_hit"], true);
}

TEST(Commands, SolveErrors) {
  TempDir dir;
  std::ostringstream out, err;
  SolveOptions s;
  s.instance_path = dir.File("missing.json");
  EXPECT_EQ(CmdSolve(s, out, err), kExitValidation);
  WriteJsonFile(dir.File("bad.json"), Json{{"schema", "vrcell.instance"},
                                           {"version", 1},
                                           {"instance", {{"n_users", 2}}}});
  s.instance_path = dir.File("bad.json");
  EXPECT_EQ(CmdSolve(s, out, err), kExitValidation);

  GenerateOptions g;
  g.config = Preset("small");
  g.out_path = dir.File("small.json");
  ASSERT_EQ(CmdGenerate(g, out, err), kExitOk);
  s.instance_path = g.out_path;
  s.solver = "bruteforce";
  EXPECT_EQ(CmdSolve(s, out, err), kExitInfeasible);
}

TEST(Commands, VerifyCatchesTampering) {
  TempDir dir;
  const std::string instance = TinyInstanceFile(dir);
  SolveOptions s;
  s.instance_path = instance;
  s.solver = "sinr";
  s.solution_path = dir.File("sol.json");
  std::ostringstream out, err;
  ASSERT_EQ(CmdSolve(s, out, err), kExitOk);

  Json doc = ReadJsonFile(s.solution_path);
  doc["report"]["objective"] = 1e6;
  WriteJsonFile(dir.File("lied.json"), doc);
  VerifyOptions v;
  v.instance_path = instance;
  v.solution_path = dir.File("lied.json");
  EXPECT_EQ(CmdVerify(v, out, err), kExitValidation);

  doc = ReadJsonFile(s.solution_path);
  doc["solution"]["assoc"][0] = 7;
  WriteJsonFile(dir.File("broken.json"), doc);
  v.solution_path = dir.File("broken.json");
  EXPECT_EQ(CmdVerify(v, out, err), kExitInfeasible);
}

TEST(Commands, SweepWritesCsvAndReport) {
  TempDir dir;
  SweepOptions s;
  s.config = QuickSweep();
  s.config.csv_path = dir.File("out.csv");
  s.config.report_path = dir.File("out.json");
  std::ostringstream out, err;
  ASSERT_EQ(CmdSweep(s, out, err), kExitOk) << err.str();
  const std::string csv = Slurp(s.config.csv_path);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 12);
  const Json report = ReadJsonFile(s.config.report_path);
  EXPECT_EQ(report["schema"], "vrcell.sweep");
  EXPECT_EQ(report["cells"].size(), 4u);
}

}  // namespace
}  // namespace vrcell::tools
