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

#include "commands.h"

#include <cmath>
#include <fstream>

#include "vrcell/scenario.h"
#include "vrcell/serialization.h"
#include "vrcell/subproblem.h"

namespace vrcell::tools {
namespace {

constexpr double kObjectiveTolerance = 1e-9;

bool Close(double a, double b) {
  return std::abs(a - b) <= kObjectiveTolerance * std::max(1.0, std::abs(b));
}

void Emit(const std::string& path, const Json& json, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << json.dump(2) << '\n';
  } else {
    WriteJsonFile(path, json);
  }
}

Instance LoadInstance(const std::string& path) {
  const Json doc = ReadJsonFile(path);
  CheckDocument(doc, "vrcell.instance");
  return InstanceFromJson(doc.at("instance"));
}

int Report(const Error& e, std::ostream& err) {
  err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
  return ExitCodeFor(e);
}

}  // namespace

int ExitCodeFor(const Error& error) {
  switch (error.code()) {
    case ErrorCode::kPlacement:
    case ErrorCode::kUncoveredUser:
    case ErrorCode::kUnreachableUser:
    case ErrorCode::kCapExceeded:
      return kExitInfeasible;
    default:
      return kExitValidation;
  }
}

int CmdGenerate(const GenerateOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    options.config.Validate();
    const double value = options.value.value_or(options.config.values.front());
    const ScenarioConfig scenario_config = options.config.ScenarioAt(value);
    const Scenario scenario = AssembleScenario(scenario_config, options.seed);
    Json doc = InstanceDocument(scenario.instance, &scenario.topology);
    doc["scenario"] = Json{
        {"experiment", options.config.name},
        {"seed", options.seed},
        {"kind", TopologyKindName(scenario_config.topology.kind)},
        {"cache_size", scenario_config.CacheSize()},
        {"views_per_user", scenario_config.ViewsPerUser()},
        {"redraws", scenario.redraws},
        {"channel", ToJson(scenario.channel)},
        {"demands", scenario.demands},
        {"caches", scenario.placement.cache}};
    Emit(options.out_path, doc, out);
    return kExitOk;
  } catch (const Error& e) {
    return Report(e, err);
  }
}

int CmdSolve(const SolveOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const Instance instance = LoadInstance(options.instance_path);
    const SolveResult result =
        RunSolver(options.solver, instance, options.params);
    const FeasibilityReport check =
        IsFeasible(instance, result.solution, options.params.mode);
    if (!options.solution_path.empty()) {
      WriteJsonFile(options.solution_path,
                    SolutionDocument(result.solution, result.report));
    }
    const Json report = ToJson(result.report);
    if (!options.report_path.empty()) WriteJsonFile(options.report_path, report);
    out << report.dump(2) << '\n';
    if (!check.feasible) {
      err << "solution is infeasible:\n" << check.Render();
      return kExitInfeasible;
    }
    return kExitOk;
  } catch (const Error& e) {
    return Report(e, err);
  } catch (const nlohmann::json::exception& e) {
    err << "error (parse): " << e.what() << '\n';
    return kExitValidation;
  }
}

int CmdSweep(const SweepOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const ExperimentConfig& config = options.config;
    const SweepResult result = RunSweep(config, options.jobs);
    if (config.csv_path.empty() || config.csv_path == "-") {
      WriteCsv(config, result.rows, out);
    } else {
      std::ofstream csv(config.csv_path);
      if (!csv) throw Error(ErrorCode::kIo, "cannot write " + config.csv_path);
      WriteCsv(config, result.rows, csv);
      if (!csv) throw Error(ErrorCode::kIo, "failed writing " + config.csv_path);
    }
    if (!config.report_path.empty()) {
      WriteJsonFile(config.report_path, result.report);
    }
    int failed = 0;
    for (const SweepRow& row : result.rows) failed += row.ok ? 0 : 1;
    if (failed > 0) err << failed << " of " << result.rows.size()
                        << " rows failed; see the error column\n";
    return kExitOk;
  } catch (const Error& e) {
    return Report(e, err);
  }
}

int CmdVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    const Instance instance = LoadInstance(options.instance_path);
    const Json doc = ReadJsonFile(options.solution_path);
    CheckDocument(doc, "vrcell.solution");
    const Solution solution = SolutionFromJson(
        doc.at("solution"), instance.n_users, instance.n_views);
    Mode mode = Mode::kUnicast;
    std::optional<double> reported;
    if (doc.contains("report") && doc["report"].is_object()) {
      const Json& report = doc["report"];
      if (report.contains("mode")) {
        mode = ParseMode(report["mode"].get<std::string>());
      }
      if (report.contains("objective") && report["objective"].is_number()) {
        reported = report["objective"].get<double>();
      }
    }
    if (options.mode) mode = *options.mode;

    Json result{{"mode", ModeName(mode)}, {"checks", Json::array()}};
    bool checks_ok = true;
    auto check = [&](const std::string& name, bool ok, const Json& detail) {
      result["checks"].push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
      checks_ok = checks_ok && ok;
    };

    const FeasibilityReport feasibility = IsFeasible(instance, solution, mode);
    result["feasible"] = feasibility.feasible;
    result["violations"] = Json::array();
    for (const Violation& v : feasibility.violations) {
      result["violations"].push_back(v.message);
    }
    if (!feasibility.feasible) {
      out << result.dump(2) << '\n';
      err << feasibility.Render();
      return kExitInfeasible;
    }

    const double objective = Objective(instance, solution);
    result["objective"] = objective;
    if (reported) {
      check("reported_objective", Close(objective, *reported),
            Json{{"reported", *reported}, {"recomputed", objective}});
    }
    const double best_for_assoc = Objective(
        instance, AllocateForAssociation(instance, solution.assoc, mode));
    check("allocation_optimal_for_association",
          objective <= best_for_assoc + kObjectiveTolerance,
          Json{{"objective", objective}, {"subproblem_optimum", best_for_assoc}});
    if (options.oracle_cap > 0) {
      try {
        const SolveResult optimum =
            SolveBruteforce(instance, {options.oracle_cap, mode});
        check("bruteforce_bound",
              objective <= optimum.report.objective + kObjectiveTolerance,
              Json{{"objective", objective},
                   {"optimum", optimum.report.objective}});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kCapExceeded) throw;
        result["bruteforce_skipped"] = e.what();
      }
    }
    out << result.dump(2) << '\n';
    return checks_ok ? kExitOk : kExitValidation;
  } catch (const Error& e) {
    return Report(e, err);
  } catch (const nlohmann::json::exception& e) {
    err << "error (parse): " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace vrcell::tools
