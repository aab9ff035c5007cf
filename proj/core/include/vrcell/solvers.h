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

#ifndef VRCELL_SOLVERS_H_
#define VRCELL_SOLVERS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrcell/channel.h"
#include "vrcell/problem.h"
#include "vrcell/topology.h"

namespace vrcell {

struct SolverReport {
  std::string solver;
  Mode mode = Mode::kUnicast;
  // Always Objective(instance, returned solution).
  double objective = 0.0;
  double wall_time_s = 0.0;
  // Branch-and-bound counters.
  int64_t nodes_explored = 0;
  int64_t nodes_pruned = 0;
  bool node_budget_hit = false;
  std::optional<double> warm_start_objective;
  // Selections decided by a tie-break rule (ELVA, EVA).
  int64_t tie_breaks = 0;
  // Parameters the run used, e.g. {"p", 1}, {"T", 251}, {"node_budget", 1e6}.
  std::map<std::string, double> params;
};

struct SolveResult {
  Solution solution;
  SolverReport report;
};

// Every user joins its highest-SINR admissible cell (ties: lowest index);
// each cell then solves its subproblem.
SolveResult SolveSinr(const Instance& instance, Mode mode = Mode::kUnicast);

struct EvaOptions {
  double p = 1.0;
  Mode mode = Mode::kUnicast;
};

// Ranks cells per user by A = (sum_k w)^p / N^b, associates each user with
// its best admissible cell, then lets users (highest A first) fill their
// views greedily from what remains of the cell budget. p = 0 reproduces the
// SINR association.
SolveResult SolveEva(const Instance& instance, const EvaOptions& options = {});

struct ElvaOptions {
  // Penalty weight for pairs whose basic cost exceeds N-bar. Defaults to
  // M * E + 1, which exceeds any achievable reward.
  std::optional<double> big_t;
  Mode mode = Mode::kUnicast;
};

// Submodular greedy: starting from N_j - N-bar, repeatedly commits the
// (user, cell) pair with the largest marginal gain
//   min(N-bar - N^b_{i,j}, 0) * T + G_{i,j}(remaining budget of j),
// where G is the user's own fractional knapsack, then re-solves every cell
// with its true residual budget.
SolveResult SolveElva(const Instance& instance,
                      const ElvaOptions& options = {});

// N-bar = max_i min_j N^b_{i,j}: the worst best-cell broadcast cost.
int64_t ComputeNbar(const Instance& instance);

// N-bar from geometry: the basic-view RB count at the rate of the link of
// length max_i min_j d_{i,j}. Agrees with ComputeNbar when there is no
// shadow fading and no interference.
int64_t ComputeNbarFromDistances(const Topology& topology,
                                 const ChannelParams& params,
                                 double basic_bits);

// min_j (N_j - N-bar) / N_j, the scale factor in ELVA's guarantee.
double ElvaRho(const Instance& instance);

struct BbOptions {
  // Stop after this many nodes and return the best incumbent.
  std::optional<int64_t> node_budget;
  Mode mode = Mode::kUnicast;
  // Seed the incumbent with the best of the ELVA, EVA and SINR associations.
  bool warm_start = true;
  // Also prune with the per-cell LP relaxation over all users still able to
  // join each cell.
  bool capacity_bound = true;
};

// Depth-first branch-and-bound over user-cell assignments. Each node picks
// the unassigned pair with the largest sum_k w (ties: best SINR, then lowest
// indices) and branches on assigning it or excluding it; nodes whose
// potential cannot beat the incumbent are pruned. Without a node budget the
// result is optimal.
SolveResult SolveBb(const Instance& instance, const BbOptions& options = {});

struct BruteforceOptions {
  // Refuses instances with S^M above this.
  int64_t cap = 1'000'000;
  Mode mode = Mode::kUnicast;
};

// Enumerates every association. Throws Error(kCapExceeded) above the cap.
SolveResult SolveBruteforce(const Instance& instance,
                            const BruteforceOptions& options = {});

// Parameters for name-based dispatch.
struct SolverParams {
  Mode mode = Mode::kUnicast;
  double eva_p = 1.0;
  std::optional<double> elva_t;
  std::optional<int64_t> bb_node_budget;
  bool bb_warm_start = true;
  int64_t bruteforce_cap = 1'000'000;
};

// "bb", "elva", "eva", "sinr" or "bruteforce".
const std::vector<std::string>& SolverNames();
// Throws Error(kParse) for an unknown name.
SolveResult RunSolver(std::string_view name, const Instance& instance,
                      const SolverParams& params);

}  // namespace vrcell

#endif  // VRCELL_SOLVERS_H_
