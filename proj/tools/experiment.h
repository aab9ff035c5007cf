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

#ifndef VRCELL_TOOLS_EXPERIMENT_H_
#define VRCELL_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vrcell/problem.h"
#include "vrcell/scenario.h"
#include "vrcell/serialization.h"
#include "vrcell/solvers.h"

namespace vrcell::tools {

// Scenario fields a sweep can vary.
enum class SweepAxis {
  kNone,
  kUsers,
  kCells,
  kViews,
  kCacheSize,
  kViewsPerUser,
  kEvaP,
  kRbBudget,
};

std::string_view SweepAxisName(SweepAxis axis);
SweepAxis ParseSweepAxis(std::string_view name);

struct ExperimentConfig {
  std::string name = "custom";
  ScenarioConfig scenario;
  std::vector<Mode> modes = {Mode::kUnicast};
  std::vector<std::string> solvers = {"bb", "elva", "eva", "sinr"};
  SolverParams params;
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> values = {0.0};
  std::vector<uint64_t> seeds;
  std::string csv_path;
  std::string report_path;

  // Throws Error(kDomain) when the config cannot run.
  void Validate() const;
  // The scenario and solver parameters at one sweep value.
  ScenarioConfig ScenarioAt(double value) const;
  SolverParams ParamsAt(double value, Mode mode) const;
};

// Seeds first, first + 1, ..., first + count - 1.
std::vector<uint64_t> SeedRange(uint64_t first, int count);

// Named presets: small, large, fig3, fig4, fig6, fig7, fig8, fig9, fig10,
// fig10a, fig10b, fig10c. Throws Error(kParse) for other names.
ExperimentConfig Preset(std::string_view name);
const std::vector<std::string>& PresetNames();

Json ToJson(const ExperimentConfig& config);
// Fields absent from `json` keep their value in `base`; a "preset" field
// selects the base instead.
ExperimentConfig ConfigFromJson(const Json& json,
                                const ExperimentConfig& base = {});

// VRCELL_SEED=n renumbers the seeds to n, n + 1, ... keeping their count.
void ApplySeedOverride(ExperimentConfig* config, const char* value);

struct SweepRow {
  double value = 0.0;
  uint64_t seed = 0;
  Mode mode = Mode::kUnicast;
  std::string solver;
  bool ok = false;
  std::string error;
  double objective = 0.0;
  std::optional<double> gap;
  std::optional<double> jain;
  double mean_utilization = 0.0;
  double wall_time_s = 0.0;
  int64_t nodes_explored = 0;
  bool node_budget_hit = false;
  bool feasible = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // value, seed, mode, then config solver order
  Json report;
};

// Runs every (value, seed, mode) cell, `jobs` at a time. Failures are
// recorded in their rows and the sweep continues.
SweepResult RunSweep(const ExperimentConfig& config, int jobs = 1);

// Fixed column order, header included.
void WriteCsv(const ExperimentConfig& config, const std::vector<SweepRow>& rows,
              std::ostream& out);
const std::vector<std::string>& CsvColumns();

}  // namespace vrcell::tools

#endif  // VRCELL_TOOLS_EXPERIMENT_H_
