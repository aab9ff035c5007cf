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
#include <cmath>
#include <limits>
#include <tuple>

#include "cell_ledger.h"
#include "vrcell/error.h"
#include "vrcell/solvers.h"
#include "vrcell/subproblem.h"

namespace vrcell {

namespace internal {

CellLedger::CellLedger(const Instance& instance, int cell, double budget,
                       Mode mode)
    : instance_(&instance),
      cell_(cell),
      budget_(budget),
      multicast_(mode == Mode::kMulticast && instance.sharing.has_value()),
      group_max_(multicast_ ? instance.n_views : 0, 0.0) {}

double CellLedger::Fill(int user, std::vector<AllocEntry>* entries,
                        double* spent) const {
  const Instance& inst = *instance_;
  struct View {
    int64_t cost;
    int view;
  };
  std::vector<View> views;
  for (int k = 0; k < inst.n_views; ++k) {
    if (inst.w(user, cell_, k)) {
      views.push_back({inst.rb_enhanced(user, cell_, k), k});
    }
  }
  std::sort(views.begin(), views.end(), [](const View& a, const View& b) {
    return std::tie(a.cost, a.view) < std::tie(b.cost, b.view);
  });
  double remaining = std::max(budget_, 0.0);
  double value = 0.0;
  for (const View& v : views) {
    const double cost = static_cast<double>(v.cost);
    double y = 0.0;
    if (multicast_ && inst.sharing->Contains(cell_, v.view, user)) {
      y = std::min(1.0, group_max_[v.view] / cost);
    }
    if (y < 1.0 && remaining > 0) {
      const double extra = (1.0 - y) * cost;
      if (remaining >= extra) {
        remaining -= extra;
        y = 1.0;
      } else {
        y += remaining / cost;
        remaining = 0.0;
      }
    }
    if (y > 0) {
      value += y;
      if (entries) entries->push_back({user, v.view, y});
    }
  }
  if (spent) *spent = std::max(budget_, 0.0) - remaining;
  return value;
}

double CellLedger::Evaluate(int user) const {
  return Fill(user, nullptr, nullptr);
}

std::vector<AllocEntry> CellLedger::Commit(int user) {
  std::vector<AllocEntry> entries;
  double spent = 0.0;
  Fill(user, &entries, &spent);
  budget_ -= spent;
  if (multicast_) {
    for (const AllocEntry& e : entries) {
      if (instance_->sharing->Contains(cell_, e.view, user)) {
        const double cost =
            e.fraction * static_cast<double>(
                             instance_->rb_enhanced(user, cell_, e.view));
        group_max_[e.view] = std::max(group_max_[e.view], cost);
      }
    }
  }
  return entries;
}

}  // namespace internal

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Highest SINR, then lowest cell index, among admissible cells.
int BestSinrCell(const Instance& instance, int user) {
  int best = -1;
  for (int j = 0; j < instance.n_cells; ++j) {
    if (!instance.Admissible(user, j)) continue;
    if (best < 0 || instance.link_sinr(user, j) > instance.link_sinr(user, best)) {
      best = j;
    }
  }
  return best;
}

void RequireValid(const Instance& instance) { instance.Validate(); }

}  // namespace

SolveResult SolveSinr(const Instance& instance, Mode mode) {
  const auto start = Clock::now();
  RequireValid(instance);
  std::vector<int> assoc(instance.n_users);
  for (int i = 0; i < instance.n_users; ++i) {
    assoc[i] = BestSinrCell(instance, i);
  }
  SolveResult result;
  result.solution = AllocateForAssociation(instance, assoc, mode);
  result.report.solver = "sinr";
  result.report.mode = mode;
  result.report.objective = Objective(instance, result.solution);
  result.report.wall_time_s = SecondsSince(start);
  return result;
}

SolveResult SolveEva(const Instance& instance, const EvaOptions& options) {
  const auto start = Clock::now();
  RequireValid(instance);
  if (!(options.p >= 0)) throw Error(ErrorCode::kDomain, "EVA needs p >= 0");
  const int n_users = instance.n_users;
  SolveResult result;
  result.report.solver = "eva";
  result.report.mode = options.mode;
  result.report.params["p"] = options.p;

  // A_{i,j} = (sum_k w)^p / N^b; pow(0, 0) = 1 keeps p = 0 equal to 1 / N^b.
  std::vector<int> assoc(n_users, -1);
  std::vector<double> score(n_users, 0.0);
  for (int i = 0; i < n_users; ++i) {
    int best = -1;
    double best_score = 0.0;
    bool tied = false;
    for (int j = 0; j < instance.n_cells; ++j) {
      if (!instance.Admissible(i, j)) continue;
      const double a = std::pow(instance.RewardCount(i, j), options.p) /
                       static_cast<double>(instance.rb_basic(i, j));
      if (best < 0 || a > best_score) {
        best = j;
        best_score = a;
        tied = false;
      } else if (a == best_score) {
        tied = true;
        if (instance.link_sinr(i, j) > instance.link_sinr(i, best)) best = j;
      }
    }
    assoc[i] = best;
    score[i] = best_score;
    if (tied) ++result.report.tie_breaks;
  }

  const auto by_cell = UsersByCell(instance, assoc);
  std::vector<internal::CellLedger> ledgers;
  ledgers.reserve(instance.n_cells);
  for (int j = 0; j < instance.n_cells; ++j) {
    ledgers.emplace_back(instance, j, ResidualBudget(instance, j, by_cell[j]),
                         options.mode);
  }
  std::vector<int> order(n_users);
  for (int i = 0; i < n_users; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] > score[b]; });

  result.solution = Solution(n_users, instance.n_views);
  result.solution.assoc = assoc;
  for (int i : order) {
    for (const AllocEntry& e : ledgers[assoc[i]].Commit(i)) {
      result.solution.alloc(e.user, e.view) = e.fraction;
    }
  }
  result.report.objective = Objective(instance, result.solution);
  result.report.wall_time_s = SecondsSince(start);
  return result;
}

int64_t ComputeNbar(const Instance& instance) {
  int64_t nbar = 0;
  for (int i = 0; i < instance.n_users; ++i) {
    int64_t best = std::numeric_limits<int64_t>::max();
    for (int j = 0; j < instance.n_cells; ++j) {
      best = std::min(best, instance.rb_basic(i, j));
    }
    nbar = std::max(nbar, best);
  }
  return nbar;
}

int64_t ComputeNbarFromDistances(const Topology& topology,
                                 const ChannelParams& params,
                                 double basic_bits) {
  int worst_user = -1;
  int worst_cell = -1;
  double worst_distance = -1.0;
  for (int i = 0; i < topology.n_users(); ++i) {
    int nearest = 0;
    double nearest_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < topology.n_cells(); ++j) {
      const double d = Distance(topology.users[i], topology.cells[j]);
      if (d < nearest_d) {
        nearest_d = d;
        nearest = j;
      }
    }
    if (nearest_d > worst_distance) {
      worst_distance = nearest_d;
      worst_user = i;
      worst_cell = nearest;
    }
  }
  if (worst_user < 0) return 0;
  const double sinr = Sinr(topology, worst_user, worst_cell, params);
  return RbsForPayload(basic_bits, RatePerRb(sinr, params));
}

double ElvaRho(const Instance& instance) {
  const double nbar = static_cast<double>(ComputeNbar(instance));
  double rho = std::numeric_limits<double>::infinity();
  for (int64_t budget : instance.rb_budget) {
    const double n = static_cast<double>(budget);
    rho = std::min(rho, (n - nbar) / n);
  }
  return rho;
}

SolveResult SolveElva(const Instance& instance, const ElvaOptions& options) {
  const auto start = Clock::now();
  RequireValid(instance);
  const int n_users = instance.n_users;
  const int n_cells = instance.n_cells;
  const int64_t nbar = ComputeNbar(instance);
  const double big_t = options.big_t.value_or(
      static_cast<double>(n_users) * instance.n_views + 1.0);

  SolveResult result;
  result.report.solver = "elva";
  result.report.mode = options.mode;
  result.report.params["T"] = big_t;
  result.report.params["nbar"] = static_cast<double>(nbar);

  std::vector<internal::CellLedger> ledgers;
  ledgers.reserve(n_cells);
  for (int j = 0; j < n_cells; ++j) {
    ledgers.emplace_back(instance, j,
                         static_cast<double>(instance.rb_budget[j] - nbar),
                         options.mode);
  }

  // Marginal gains; only the column of the cell that just changed is stale
  // after each commit.
  constexpr double kNotCandidate = -std::numeric_limits<double>::infinity();
  Matrix<double> gain(n_users, n_cells, kNotCandidate);
  auto evaluate = [&](int i, int j) {
    if (!instance.Admissible(i, j)) return kNotCandidate;
    const double deficit =
        std::min<double>(static_cast<double>(nbar - instance.rb_basic(i, j)), 0.0);
    return deficit * big_t + ledgers[j].Evaluate(i);
  };
  for (int i = 0; i < n_users; ++i) {
    for (int j = 0; j < n_cells; ++j) gain(i, j) = evaluate(i, j);
  }

  std::vector<int> assoc(n_users, -1);
  for (int round = 0; round < n_users; ++round) {
    int best_i = -1;
    int best_j = -1;
    bool tied = false;
    for (int i = 0; i < n_users; ++i) {
      if (assoc[i] >= 0) continue;
      for (int j = 0; j < n_cells; ++j) {
        const double g = gain(i, j);
        if (g == kNotCandidate) continue;
        if (best_i < 0 || g > gain(best_i, best_j)) {
          best_i = i;
          best_j = j;
          tied = false;
        } else if (g == gain(best_i, best_j)) {
          tied = true;
          // Best SINR wins; scanning order already prefers lower indices.
          if (instance.link_sinr(i, j) > instance.link_sinr(best_i, best_j)) {
            best_i = i;
            best_j = j;
          }
        }
      }
    }
    if (tied) ++result.report.tie_breaks;
    assoc[best_i] = best_j;
    ledgers[best_j].Commit(best_i);
    for (int i = 0; i < n_users; ++i) {
      if (assoc[i] < 0) gain(i, best_j) = evaluate(i, best_j);
    }
  }

  // Cells whose broadcast cost ended below N-bar get the slack back.
  result.solution = AllocateForAssociation(instance, assoc, options.mode);
  result.report.objective = Objective(instance, result.solution);
  result.report.wall_time_s = SecondsSince(start);
  return result;
}

const std::vector<std::string>& SolverNames() {
  static const std::vector<std::string> kNames = {"bb", "elva", "eva", "sinr",
                                                  "bruteforce"};
  return kNames;
}

SolveResult RunSolver(std::string_view name, const Instance& instance,
                      const SolverParams& params) {
  if (name == "sinr") return SolveSinr(instance, params.mode);
  if (name == "eva") return SolveEva(instance, {params.eva_p, params.mode});
  if (name == "elva") return SolveElva(instance, {params.elva_t, params.mode});
  if (name == "bb") {
    BbOptions options;
    options.node_budget = params.bb_node_budget;
    options.mode = params.mode;
    options.warm_start = params.bb_warm_start;
    return SolveBb(instance, options);
  }
  if (name == "bruteforce") {
    return SolveBruteforce(instance, {params.bruteforce_cap, params.mode});
  }
  throw Error(ErrorCode::kParse, "unknown solver '" + std::string(name) + "'");
}

}  // namespace vrcell
