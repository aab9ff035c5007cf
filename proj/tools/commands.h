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

#ifndef VRCELL_TOOLS_COMMANDS_H_
#define VRCELL_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "experiment.h"
#include "vrcell/error.h"
#include "vrcell/solvers.h"

namespace vrcell::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInfeasible = 2;

// Placement, coverage and brute-force cap errors map to kExitInfeasible,
// everything else to kExitValidation.
int ExitCodeFor(const Error& error);

struct GenerateOptions {
  ExperimentConfig config;
  uint64_t seed = 1;
  // Sweep value to generate at; the first configured value when empty.
  std::optional<double> value;
  std::string out_path;  // "-" or empty writes to `out`
};

// Writes an instance document with its topology and scenario metadata.
int CmdGenerate(const GenerateOptions& options, std::ostream& out,
                std::ostream& err);

struct SolveOptions {
  std::string instance_path;
  std::string solver = "elva";
  SolverParams params;
  std::string solution_path;  // optional solution document
  std::string report_path;    // optional copy of the printed report
};

// Prints the solver report as JSON. Exit status 0 iff the solution is
// feasible.
int CmdSolve(const SolveOptions& options, std::ostream& out,
             std::ostream& err);

struct SweepOptions {
  ExperimentConfig config;
  int jobs = 1;
};

// Writes the CSV to config.csv_path (or `out`) and the JSON report to
// config.report_path when set.
int CmdSweep(const SweepOptions& options, std::ostream& out,
             std::ostream& err);

struct VerifyOptions {
  std::string instance_path;
  std::string solution_path;
  // Taken from the solution document's report when empty.
  std::optional<Mode> mode;
  // Brute-force optimality bound when S^M is at most this; 0 disables it.
  int64_t oracle_cap = 1'000'000;
};

// Feasibility plus oracle checks: the reported objective matches, the
// allocation is optimal for its association and, when small enough, the
// objective does not exceed the brute-force optimum. Exit status 2 when
// infeasible, 1 when a check fails.
int CmdVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace vrcell::tools

#endif  // VRCELL_TOOLS_COMMANDS_H_
