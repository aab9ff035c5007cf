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

#ifndef VRCELL_SRC_CELL_LEDGER_H_
#define VRCELL_SRC_CELL_LEDGER_H_

#include <vector>

#include "vrcell/problem.h"
#include "vrcell/subproblem.h"

namespace vrcell::internal {

// Live RB budget of one cell while greedy solvers add users one at a time.
// In multicast mode a sharing-group member only pays for raising the
// group's current maximum alloc * N^e.
class CellLedger {
 public:
  CellLedger(const Instance& instance, int cell, double budget, Mode mode);

  double budget() const { return budget_; }

  // Reward `user` would get by filling its views in w / N^e order with the
  // current budget.
  double Evaluate(int user) const;

  // Same fill, applied: the budget shrinks and the entries are returned.
  std::vector<AllocEntry> Commit(int user);

 private:
  double Fill(int user, std::vector<AllocEntry>* entries, double* spent) const;

  const Instance* instance_;
  int cell_;
  double budget_;
  bool multicast_;
  std::vector<double> group_max_;
};

}  // namespace vrcell::internal

#endif  // VRCELL_SRC_CELL_LEDGER_H_
