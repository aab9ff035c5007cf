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

#ifndef VRCELL_METRICS_H_
#define VRCELL_METRICS_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrcell/problem.h"
#include "vrcell/solvers.h"

namespace vrcell {

// rb_usage(j) / N_j per cell.
std::vector<double> ResourceUtilization(const Instance& instance,
                                        const Solution& solution,
                                        Mode mode = Mode::kUnicast);

// Cell counts in the bands [0, 0.2], (0.2, 0.4], (0.4, 0.6], (0.6, 0.8],
// (0.8, 1].
std::array<int, 5> UtilizationBands(std::span<const double> utilization);

// (sum r)^2 / (n * sum r^2); empty when every reward is zero.
std::optional<double> JainIndex(std::span<const double> rewards);

struct SolverSummary {
  std::string solver;
  double objective = 0.0;
  // objective / reference, where the reference is bb when present and the
  // best objective otherwise. Empty when the reference is 0.
  std::optional<double> gap;
  std::optional<double> jain;
  std::vector<double> utilization;
  double mean_utilization = 0.0;
  std::vector<double> user_rewards;
  double wall_time_s = 0.0;
  bool feasible = true;
};

struct RunSummary {
  Mode mode = Mode::kUnicast;
  std::string reference;  // solver the gaps are relative to
  std::vector<SolverSummary> solvers;
};

// Keyed by solver name; output follows the key order.
RunSummary Summarize(const Instance& instance,
                     const std::map<std::string, SolveResult>& results,
                     Mode mode = Mode::kUnicast);

}  // namespace vrcell

#endif  // VRCELL_METRICS_H_
