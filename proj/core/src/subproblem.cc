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

#include "vrcell/subproblem.h"

#include <algorithm>
#include <tuple>

namespace vrcell {

namespace {

struct Item {
  int64_t cost;
  int user;
  int view;
};

CellAllocation SolveUnicast(const Instance& instance, int cell,
                            std::span<const int> users, double budget) {
  std::vector<Item> items;
  for (int i : users) {
    for (int k = 0; k < instance.n_views; ++k) {
      if (instance.w(i, cell, k)) {
        items.push_back({instance.rb_enhanced(i, cell, k), i, k});
      }
    }
  }
  // All candidate rewards are 1, so w / N^e descending is N^e ascending.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.cost, a.user, a.view) < std::tie(b.cost, b.user, b.view);
  });
  CellAllocation out;
  double remaining = budget;
  for (const Item& item : items) {
    if (remaining <= 0) break;
    const double cost = static_cast<double>(item.cost);
    double y = 1.0;
    if (remaining >= cost) {
      remaining -= cost;
    } else {
      y = remaining / cost;
      remaining = 0.0;
    }
    out.entries.push_back({item.user, item.view, y});
    out.value += y;
  }
  return out;
}

struct Piece {
  double slope;   // reward per RB
  double length;  // RBs
  int view;
  int kind;       // 0: group segment, 1: unicast item
  int order;      // segment index or user
};

CellAllocation SolveMulticast(const Instance& instance, int cell,
                              std::span<const int> users, double budget) {
  const int n_views = instance.n_views;
  std::vector<Piece> pieces;
  // Members of each view's group present in `users`, sorted by cost.
  std::vector<std::vector<std::pair<int64_t, int>>> members(n_views);
  for (int i : users) {
    for (int k = 0; k < n_views; ++k) {
      if (!instance.w(i, cell, k)) continue;
      const int64_t cost = instance.rb_enhanced(i, cell, k);
      if (instance.sharing->Contains(cell, k, i)) {
        members[k].push_back({cost, i});
      } else {
        pieces.push_back({1.0 / static_cast<double>(cost),
                          static_cast<double>(cost), k, 1, i});
      }
    }
  }
  for (int k = 0; k < n_views; ++k) {
    auto& m = members[k];
    std::sort(m.begin(), m.end());
    // Suffix sums of 1/N^e give the slope of each segment between
    // consecutive member costs.
    std::vector<double> slope(m.size() + 1, 0.0);
    for (size_t s = m.size(); s-- > 0;) {
      slope[s] = slope[s + 1] + 1.0 / static_cast<double>(m[s].first);
    }
    int64_t previous = 0;
    for (size_t s = 0; s < m.size(); ++s) {
      if (m[s].first > previous) {
        pieces.push_back({slope[s], static_cast<double>(m[s].first - previous),
                          k, 0, static_cast<int>(s)});
        previous = m[s].first;
      }
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return std::tie(a.view, a.kind, a.order) <
           std::tie(b.view, b.kind, b.order);
  });

  CellAllocation out;
  std::vector<double> group_spend(n_views, 0.0);
  std::vector<std::pair<int, int>> unicast;  // (user, view) for y lookup
  std::vector<double> unicast_y;
  double remaining = budget;
  for (const Piece& p : pieces) {
    if (remaining <= 0) break;
    const double spend = std::min(p.length, remaining);
    remaining -= spend;
    if (p.kind == 0) {
      group_spend[p.view] += spend;
    } else {
      unicast.push_back({p.order, p.view});
      unicast_y.push_back(spend == p.length ? 1.0 : spend / p.length);
    }
  }
  for (size_t t = 0; t < unicast.size(); ++t) {
    out.entries.push_back({unicast[t].first, unicast[t].second, unicast_y[t]});
  }
  for (int k = 0; k < n_views; ++k) {
    if (group_spend[k] <= 0) continue;
    for (const auto& [cost, user] : members[k]) {
      const double c = static_cast<double>(cost);
      const double y = group_spend[k] >= c ? 1.0 : group_spend[k] / c;
      out.entries.push_back({user, k, y});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const AllocEntry& a, const AllocEntry& b) {
              return std::tie(a.user, a.view) < std::tie(b.user, b.view);
            });
  for (const AllocEntry& e : out.entries) out.value += e.fraction;
  return out;
}

}  // namespace

CellAllocation SolveCellSubproblem(const Instance& instance, int cell,
                                   std::span<const int> users, double budget,
                                   Mode mode) {
  if (budget < 0) {
    CellAllocation out;
    out.infeasible = true;
    return out;
  }
  if (mode == Mode::kMulticast && instance.sharing) {
    return SolveMulticast(instance, cell, users, budget);
  }
  return SolveUnicast(instance, cell, users, budget);
}

std::vector<std::vector<int>> UsersByCell(const Instance& instance,
                                          std::span<const int> assoc) {
  std::vector<std::vector<int>> by_cell(instance.n_cells);
  for (int i = 0; i < static_cast<int>(assoc.size()); ++i) {
    by_cell[assoc[i]].push_back(i);
  }
  return by_cell;
}

double ResidualBudget(const Instance& instance, int cell,
                      std::span<const int> users) {
  int64_t broadcast = 0;
  for (int i : users) {
    broadcast = std::max(broadcast, instance.rb_basic(i, cell));
  }
  return static_cast<double>(instance.rb_budget[cell] - broadcast);
}

Solution AllocateForAssociation(const Instance& instance,
                                std::span<const int> assoc, Mode mode) {
  Solution solution(instance.n_users, instance.n_views);
  solution.assoc.assign(assoc.begin(), assoc.end());
  const auto by_cell = UsersByCell(instance, assoc);
  for (int j = 0; j < instance.n_cells; ++j) {
    if (by_cell[j].empty()) continue;
    const CellAllocation cell = SolveCellSubproblem(
        instance, j, by_cell[j], ResidualBudget(instance, j, by_cell[j]), mode);
    for (const AllocEntry& e : cell.entries) {
      solution.alloc(e.user, e.view) = e.fraction;
    }
  }
  return solution;
}

}  // namespace vrcell
