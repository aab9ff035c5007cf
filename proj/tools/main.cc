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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "experiment.h"
#include "vrcell/serialization.h"

namespace {

using vrcell::tools::ExperimentConfig;

// Experiment flags shared by generate and sweep; applied on top of the
// preset and the config file.
struct ExperimentFlags {
  std::string preset = "small";
  std::string config_path;
  std::optional<std::string> kind;
  std::optional<int> users, cells, views, cache_size, views_per_user;
  std::optional<int> seed_count;
  std::optional<uint64_t> first_seed;
  std::vector<std::string> solvers;
  std::vector<std::string> modes;
  std::optional<int64_t> node_budget;
  std::optional<double> eva_p;
  std::optional<double> shareable;
  std::optional<std::string> csv, report;

  void Register(CLI::App* app) {
    app->add_option("--preset", preset, "named preset")
        ->check(CLI::IsMember(vrcell::tools::PresetNames()));
    app->add_option("--config", config_path, "experiment config (JSON)")
        ->check(CLI::ExistingFile);
    app->add_option("--kind", kind, "hotspot or uniform")
        ->check(CLI::IsMember({"hotspot", "uniform"}));
    app->add_option("--users", users, "number of users M");
    app->add_option("--cells", cells, "number of cells S");
    app->add_option("--views", views, "number of enhanced views E");
    app->add_option("--cache-size", cache_size, "cache size K");
    app->add_option("--views-per-user", views_per_user, "views each user wants");
    app->add_option("--seeds", seed_count, "number of seeds");
    app->add_option("--first-seed", first_seed, "first seed");
    app->add_option("--solvers", solvers, "solver list")->delimiter(',');
    app->add_option("--modes", modes, "unicast and/or multicast")
        ->delimiter(',');
    app->add_option("--node-budget", node_budget, "bb node budget");
    app->add_option("--p", eva_p, "EVA exponent p");
    app->add_option("--shareable", shareable,
                    "fraction of users that may share a multicast");
    app->add_option("--csv", csv, "CSV output path");
    app->add_option("--report", report, "JSON report path");
  }

  ExperimentConfig Build() const {
    ExperimentConfig config = vrcell::tools::Preset(preset);
    if (!config_path.empty()) {
      config = vrcell::tools::ConfigFromJson(vrcell::ReadJsonFile(config_path),
                                             config);
    }
    auto& s = config.scenario;
    if (kind) s.topology.kind = vrcell::ParseTopologyKind(*kind);
    if (users) s.topology.n_users = *users;
    if (cells) s.topology.n_cells = *cells;
    if (views) s.n_views = *views;
    if (cache_size) s.cache_size = *cache_size;
    if (views_per_user) s.views_per_user = *views_per_user;
    if (shareable) s.shareable_fraction = *shareable;
    if (seed_count || first_seed) {
      config.seeds = vrcell::tools::SeedRange(
          first_seed.value_or(config.seeds.empty() ? 1 : config.seeds.front()),
          seed_count.value_or(static_cast<int>(config.seeds.size())));
    }
    if (!solvers.empty()) config.solvers = solvers;
    if (!modes.empty()) {
      config.modes.clear();
      for (const auto& m : modes) config.modes.push_back(vrcell::ParseMode(m));
    }
    if (node_budget) config.params.bb_node_budget = *node_budget;
    if (eva_p) config.params.eva_p = *eva_p;
    if (csv) config.csv_path = *csv;
    if (report) config.report_path = *report;
    vrcell::tools::ApplySeedOverride(&config, std::getenv("VRCELL_SEED"));
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"User-cell association and enhanced-view allocation for "
               "360-degree video over small cells"};
  app.require_subcommand(1);

  ExperimentFlags generate_flags;
  vrcell::tools::GenerateOptions generate;
  std::optional<double> generate_value;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "write a generated instance");
  generate_flags.Register(generate_cmd);
  generate_cmd->add_option("--seed", generate.seed, "scenario seed");
  generate_cmd->add_option("--value", generate_value,
                           "sweep value (defaults to the first)");
  generate_cmd->add_option("-o,--out", generate.out_path,
                           "output file, '-' for stdout");

  vrcell::tools::SolveOptions solve;
  std::string solve_mode = "unicast";
  std::optional<double> solve_t;
  std::optional<int64_t> solve_budget;
  bool no_warm_start = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run one solver");
  solve_cmd->add_option("-i,--instance", solve.instance_path, "instance file")
      ->required();
  solve_cmd->add_option("-s,--solver", solve.solver, "solver name")
      ->check(CLI::IsMember(vrcell::SolverNames()));
  solve_cmd->add_option("--mode", solve_mode, "unicast or multicast")
      ->check(CLI::IsMember({"unicast", "multicast"}));
  solve_cmd->add_option("--p", solve.params.eva_p, "EVA exponent p");
  solve_cmd->add_option("--T", solve_t, "ELVA penalty weight");
  solve_cmd->add_option("--node-budget", solve_budget, "bb node budget");
  solve_cmd->add_flag("--no-warm-start", no_warm_start,
                      "start bb without a greedy incumbent");
  solve_cmd->add_option("--cap", solve.params.bruteforce_cap,
                        "brute-force limit on S^M");
  solve_cmd->add_option("-o,--out", solve.solution_path, "solution file");
  solve_cmd->add_option("--report", solve.report_path, "report file");

  ExperimentFlags sweep_flags;
  vrcell::tools::SweepOptions sweep;
  bool print_config = false;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a preset or configured experiment");
  sweep_flags.Register(sweep_cmd);
  sweep_cmd->add_option("-j,--jobs", sweep.jobs, "parallel sweep cells")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--print-config", print_config,
                      "print the effective config and exit");

  vrcell::tools::VerifyOptions verify;
  std::optional<std::string> verify_mode;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a solution against its instance");
  verify_cmd->add_option("-i,--instance", verify.instance_path, "instance file")
      ->required();
  verify_cmd->add_option("--solution", verify.solution_path, "solution file")
      ->required();
  verify_cmd->add_option("--mode", verify_mode, "override the solution's mode")
      ->check(CLI::IsMember({"unicast", "multicast"}));
  verify_cmd->add_option("--oracle-cap", verify.oracle_cap,
                         "brute-force limit on S^M, 0 to skip");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate_cmd->parsed()) {
      generate.config = generate_flags.Build();
      generate.value = generate_value;
      return vrcell::tools::CmdGenerate(generate, std::cout, std::cerr);
    }
    if (solve_cmd->parsed()) {
      solve.params.mode = vrcell::ParseMode(solve_mode);
      solve.params.elva_t = solve_t;
      solve.params.bb_node_budget = solve_budget;
      solve.params.bb_warm_start = !no_warm_start;
      return vrcell::tools::CmdSolve(solve, std::cout, std::cerr);
    }
    if (sweep_cmd->parsed()) {
      sweep.config = sweep_flags.Build();
      if (print_config) {
        std::cout << vrcell::tools::ToJson(sweep.config).dump(2) << '\n';
        return vrcell::tools::kExitOk;
      }
      return vrcell::tools::CmdSweep(sweep, std::cout, std::cerr);
    }
    if (verify_mode) verify.mode = vrcell::ParseMode(*verify_mode);
    return vrcell::tools::CmdVerify(verify, std::cout, std::cerr);
  } catch (const vrcell::Error& e) {
    std::cerr << "error (" << vrcell::ErrorCodeName(e.code()) << "): "
              << e.what() << '\n';
    return vrcell::tools::ExitCodeFor(e);
  }
}
