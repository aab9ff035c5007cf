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

#ifndef VRCELL_SUBPROBLEM_H_
#define VRCELL_SUBPROBLEM_H_

#include <span>
#include <vector>

#include "vrcell/problem.h"

namespace vrcell {

struct AllocEntry {
  int user = 0;
  int view = 0;
  double fraction = 0.0;

  bool operator==(const AllocEntry&) const = default;
};

struct CellAllocation {
  std::vector<AllocEntry> entries;  // only positive fractions
  double value = 0.0;
  // Set when the budget is negative: the basic view alone does not fit.
  bool infeasible = false;
};

// Optimal enhanced-view allocation inside one cell for a fixed user set and
// the RB budget left after the basic-view broadcast.
//
// Unicast: fractional knapsack. Items (i, k) with w = 1 are taken in order of
// w / N^e (ties: lower N^e, lower user, lower view); the last one may be
// fractional. This is the LP optimum.
//
// Multicast: a sharing group spending z RBs on view k delivers
// min(1, z / N^e) to each member, a concave piecewise-linear gain. Group
// segments and unicast items are merged in order of marginal reward per RB,
// which is again exact for the LP.
CellAllocation SolveCellSubproblem(const Instance& instance, int cell,
                                   std::span<const int> users, double budget,
                                   Mode mode = Mode::kUnicast);

// Allocation for a fixed association: every cell solves its subproblem with
// N_j minus its largest basic-view cost.
Solution AllocateForAssociation(const Instance& instance,
                                std::span<const int> assoc,
                                Mode mode = Mode::kUnicast);

// Users of each cell under `assoc`, in increasing index order.
std::vector<std::vector<int>> UsersByCell(const Instance& instance,
                                          std::span<const int> assoc);

// N_j - max_{i in users} N^b_{i,j}; N_j when `users` is empty.
double ResidualBudget(const Instance& instance, int cell,
                      std::span<const int> users);

}  // namespace vrcell

#endif  // VRCELL_SUBPROBLEM_H_
