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

#include "vrcell/metrics.h"

#include <algorithm>

namespace vrcell {

std::vector<double> ResourceUtilization(const Instance& instance,
                                        const Solution& solution, Mode mode) {
  std::vector<double> usage = RbUsage(instance, solution, mode);
  for (int j = 0; j < instance.n_cells; ++j) {
    const double budget = static_cast<double>(instance.rb_budget[j]);
    double u = usage[j] / budget;
    // Absorb the fractional-sum tolerance.
    if (u > 1.0 && usage[j] <= budget + kBudgetTolerance) u = 1.0;
    usage[j] = u;
  }
  return usage;
}

std::array<int, 5> UtilizationBands(std::span<const double> utilization) {
  std::array<int, 5> bands{};
  for (double u : utilization) {
    int band = 0;
    while (band < 4 && u > 0.2 * (band + 1)) ++band;
    ++bands[band];
  }
  return bands;
}

std::optional<double> JainIndex(std::span<const double> rewards) {
  double sum = 0.0;
  double squares = 0.0;
  for (double r : rewards) {
    sum += r;
    squares += r * r;
  }
  if (squares <= 0.0) return std::nullopt;
  return sum * sum / (static_cast<double>(rewards.size()) * squares);
}

RunSummary Summarize(const Instance& instance,
                     const std::map<std::string, SolveResult>& results,
                     Mode mode) {
  RunSummary summary;
  summary.mode = mode;
  double reference = 0.0;
  if (auto bb = results.find("bb"); bb != results.end()) {
    summary.reference = "bb";
    reference = bb->second.report.objective;
  } else {
    for (const auto& [name, result] : results) {
      if (summary.reference.empty() || result.report.objective > reference) {
        summary.reference = name;
        reference = result.report.objective;
      }
    }
  }
  for (const auto& [name, result] : results) {
    SolverSummary row;
    row.solver = name;
    row.objective = result.report.objective;
    if (reference > 0) row.gap = row.objective / reference;
    row.user_rewards = PerUserReward(instance, result.solution);
    row.jain = JainIndex(row.user_rewards);
    row.utilization = ResourceUtilization(instance, result.solution, mode);
    double total = 0.0;
    for (double u : row.utilization) total += u;
    row.mean_utilization =
        row.utilization.empty() ? 0.0 : total / row.utilization.size();
    row.wall_time_s = result.report.wall_time_s;
    row.feasible = IsFeasible(instance, result.solution, mode).feasible;
    summary.solvers.push_back(std::move(row));
  }
  return summary;
}

}  // namespace vrcell
