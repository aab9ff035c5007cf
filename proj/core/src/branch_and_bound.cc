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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

#include "vrcell/error.h"
#include "vrcell/solvers.h"
#include "vrcell/subproblem.h"

namespace vrcell {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPruneSlack = 1e-9;

struct Node {
  std::vector<int> assoc;          // -1 while unassigned
  std::vector<uint8_t> allowed;    // user-major, n_users x n_cells
  std::vector<double> cell_value;  // subproblem value of the assigned users
  std::vector<double> cell_cap;    // LP over members and candidates
  int depth = 0;
};

class Search {
 public:
  Search(const Instance& instance, const BbOptions& options)
      : inst_(instance), options_(options) {}

  bool Allowed(const Node& node, int i, int j) const {
    return node.allowed[static_cast<size_t>(i) * inst_.n_cells + j] != 0;
  }

  std::vector<int> Members(const Node& node, int j) const {
    std::vector<int> members;
    for (int i = 0; i < inst_.n_users; ++i) {
      if (node.assoc[i] == j) members.push_back(i);
    }
    return members;
  }

  double CellValue(const Node& node, int j) const {
    const std::vector<int> members = Members(node, j);
    if (members.empty()) return 0.0;
    return SolveCellSubproblem(inst_, j, members,
                               ResidualBudget(inst_, j, members), options_.mode)
        .value;
  }

  double CellCap(const Node& node, int j) const {
    std::vector<int> users;
    int64_t max_member = -1;
    int64_t min_candidate = std::numeric_limits<int64_t>::max();
    for (int i = 0; i < inst_.n_users; ++i) {
      if (node.assoc[i] == j) {
        users.push_back(i);
        max_member = std::max(max_member, inst_.rb_basic(i, j));
      } else if (node.assoc[i] < 0 && Allowed(node, i, j)) {
        users.push_back(i);
        min_candidate = std::min(min_candidate, inst_.rb_basic(i, j));
      }
    }
    if (users.empty()) return 0.0;
    const int64_t broadcast = max_member >= 0 ? max_member : min_candidate;
    const double budget =
        static_cast<double>(inst_.rb_budget[j] - broadcast);
    return SolveCellSubproblem(inst_, j, users, budget, options_.mode).value;
  }

  // Sum over unassigned users of their best remaining reward count; -1 if
  // some unassigned user has no cell left.
  double Potential(const Node& node) const {
    double total = 0.0;
    for (int i = 0; i < inst_.n_users; ++i) {
      if (node.assoc[i] >= 0) continue;
      int best = -1;
      for (int j = 0; j < inst_.n_cells; ++j) {
        if (Allowed(node, i, j)) best = std::max(best, inst_.RewardCount(i, j));
      }
      if (best < 0) return -1.0;
      total += best;
    }
    return total;
  }

  static double Sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }

  SolveResult Run(SolverReport report) {
    const auto start = Clock::now();
    const int n_users = inst_.n_users;
    const int n_cells = inst_.n_cells;

    double incumbent = -std::numeric_limits<double>::infinity();
    std::vector<int> best_assoc;
    if (options_.warm_start) {
      const SolveResult seeds[] = {SolveElva(inst_, {std::nullopt, options_.mode}),
                                   SolveEva(inst_, {1.0, options_.mode}),
                                   SolveSinr(inst_, options_.mode)};
      for (const SolveResult& seed : seeds) {
        if (seed.report.objective > incumbent) {
          incumbent = seed.report.objective;
          best_assoc = seed.solution.assoc;
        }
      }
      report.warm_start_objective = incumbent;
    }

    Node root;
    root.assoc.assign(n_users, -1);
    root.allowed.assign(static_cast<size_t>(n_users) * n_cells, 0);
    for (int i = 0; i < n_users; ++i) {
      for (int j = 0; j < n_cells; ++j) {
        root.allowed[static_cast<size_t>(i) * n_cells + j] =
            inst_.Admissible(i, j) ? 1 : 0;
      }
    }
    root.cell_value.assign(n_cells, 0.0);
    root.cell_cap.assign(n_cells, 0.0);
    if (options_.capacity_bound) {
      for (int j = 0; j < n_cells; ++j) root.cell_cap[j] = CellCap(root, j);
    }

    std::vector<Node> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      if (options_.node_budget && report.nodes_explored >= *options_.node_budget) {
        report.node_budget_hit = true;
        break;
      }
      Node node = std::move(stack.back());
      stack.pop_back();
      ++report.nodes_explored;

      const double current = Sum(node.cell_value);
      const double potential = Potential(node);
      if (potential < 0) {
        ++report.nodes_pruned;
        continue;
      }
      double bound = current + potential;
      if (options_.capacity_bound) bound = std::min(bound, Sum(node.cell_cap));
      if (bound <= incumbent + kPruneSlack) {
        ++report.nodes_pruned;
        continue;
      }

      // Branching pair: largest reward count, then best SINR, then indices.
      int bi = -1;
      int bj = -1;
      for (int i = 0; i < n_users; ++i) {
        if (node.assoc[i] >= 0) continue;
        for (int j = 0; j < n_cells; ++j) {
          if (!Allowed(node, i, j)) continue;
          if (bi < 0) {
            bi = i;
            bj = j;
            continue;
          }
          const int rc = inst_.RewardCount(i, j);
          const int best_rc = inst_.RewardCount(bi, bj);
          if (rc > best_rc ||
              (rc == best_rc && inst_.link_sinr(i, j) > inst_.link_sinr(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) {
        // Leaf: everyone is associated.
        if (current > incumbent) {
          incumbent = current;
          best_assoc = node.assoc;
        }
        continue;
      }

      Node assign = node;
      assign.assoc[bi] = bj;
      assign.depth = node.depth + 1;
      assign.cell_value[bj] = CellValue(assign, bj);
      if (options_.capacity_bound) {
        for (int j = 0; j < n_cells; ++j) {
          if (Allowed(node, bi, j)) assign.cell_cap[j] = CellCap(assign, j);
        }
      }

      Node exclude = std::move(node);
      exclude.allowed[static_cast<size_t>(bi) * n_cells + bj] = 0;
      exclude.depth = assign.depth;
      if (options_.capacity_bound) exclude.cell_cap[bj] = CellCap(exclude, bj);

      // Exploring the child with the larger potential first: assigning keeps
      // the gain in the cell value, excluding keeps bi's second-best count.
      int second_rc = 0;
      for (int j = 0; j < n_cells; ++j) {
        if (j != bj && Allowed(exclude, bi, j)) {
          second_rc = std::max(second_rc, inst_.RewardCount(bi, j));
        }
      }
      const double gain = assign.cell_value[bj] - exclude.cell_value[bj];
      if (gain >= second_rc) {
        stack.push_back(std::move(exclude));
        stack.push_back(std::move(assign));
      } else {
        stack.push_back(std::move(assign));
        stack.push_back(std::move(exclude));
      }
    }

    SolveResult result;
    if (best_assoc.empty()) {
      // Budget ran out before any leaf and there was no warm start.
      best_assoc = SolveSinr(inst_, options_.mode).solution.assoc;
    }
    result.solution = AllocateForAssociation(inst_, best_assoc, options_.mode);
    report.objective = Objective(inst_, result.solution);
    report.wall_time_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    result.report = std::move(report);
    return result;
  }

 private:
  const Instance& inst_;
  const BbOptions& options_;
};

}  // namespace

SolveResult SolveBb(const Instance& instance, const BbOptions& options) {
  instance.Validate();
  if (options.node_budget && *options.node_budget < 1) {
    throw Error(ErrorCode::kDomain, "node budget must be positive");
  }
  SolverReport report;
  report.solver = "bb";
  report.mode = options.mode;
  if (options.node_budget) {
    report.params["node_budget"] = static_cast<double>(*options.node_budget);
  }
  report.params["warm_start"] = options.warm_start ? 1.0 : 0.0;
  return Search(instance, options).Run(std::move(report));
}

}  // namespace vrcell
