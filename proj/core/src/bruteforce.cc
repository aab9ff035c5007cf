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

#include <chrono>
#include <limits>
#include <string>
#include <vector>

#include "vrcell/error.h"
#include "vrcell/solvers.h"
#include "vrcell/subproblem.h"

namespace vrcell {

SolveResult SolveBruteforce(const Instance& instance,
                            const BruteforceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  instance.Validate();
  const int n_users = instance.n_users;
  const int n_cells = instance.n_cells;

  // S^M without overflow.
  int64_t space = 1;
  for (int i = 0; i < n_users; ++i) {
    if (space > options.cap / n_cells) {
      throw Error(ErrorCode::kCapExceeded,
                  "S^M exceeds the brute-force cap of " +
                      std::to_string(options.cap));
    }
    space *= n_cells;
  }
  if (space > options.cap) {
    throw Error(ErrorCode::kCapExceeded, "S^M exceeds the brute-force cap of " +
                                             std::to_string(options.cap));
  }

  std::vector<std::vector<int>> choices(n_users);
  for (int i = 0; i < n_users; ++i) {
    for (int j = 0; j < n_cells; ++j) {
      if (instance.Admissible(i, j)) choices[i].push_back(j);
    }
  }

  std::vector<int> digit(n_users, 0);
  std::vector<int> assoc(n_users);
  double best = -std::numeric_limits<double>::infinity();
  SolveResult result;
  int64_t evaluated = 0;
  while (true) {
    for (int i = 0; i < n_users; ++i) assoc[i] = choices[i][digit[i]];
    Solution candidate = AllocateForAssociation(instance, assoc, options.mode);
    const double value = Objective(instance, candidate);
    ++evaluated;
    if (value > best) {
      best = value;
      result.solution = std::move(candidate);
    }
    int pos = n_users - 1;
    while (pos >= 0 && ++digit[pos] == static_cast<int>(choices[pos].size())) {
      digit[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  result.report.solver = "bruteforce";
  result.report.mode = options.mode;
  result.report.objective = best;
  result.report.nodes_explored = evaluated;
  result.report.params["cap"] = static_cast<double>(options.cap);
  result.report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace vrcell
