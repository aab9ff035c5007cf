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

#include "vrcell/problem.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vrcell/error.h"

namespace vrcell {

std::string_view ModeName(Mode mode) {
  return mode == Mode::kUnicast ? "unicast" : "multicast";
}

Mode ParseMode(std::string_view name) {
  if (name == "unicast") return Mode::kUnicast;
  if (name == "multicast") return Mode::kMulticast;
  throw Error(ErrorCode::kParse, "unknown mode '" + std::string(name) + "'");
}

bool SharingGroups::Contains(int cell, int view, int user) const {
  const auto& g = group(cell, view);
  return std::binary_search(g.begin(), g.end(), user);
}

int Instance::RewardCount(int user, int cell) const {
  int count = 0;
  for (uint8_t v : w.fiber(user, cell)) count += v;
  return count;
}

void Instance::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidInstance, what);
  };
  if (n_users < 0 || n_cells <= 0 || n_views < 0) {
    fail("instance needs at least one cell and non-negative counts");
  }
  if (w.dim0() != n_users || w.dim1() != n_cells || w.dim2() != n_views) {
    fail("w has the wrong shape");
  }
  if (static_cast<int>(rb_budget.size()) != n_cells) {
    fail("rb_budget must have one entry per cell");
  }
  if (rb_basic.rows() != n_users || rb_basic.cols() != n_cells) {
    fail("rb_basic has the wrong shape");
  }
  if (rb_enhanced.dim0() != n_users || rb_enhanced.dim1() != n_cells ||
      rb_enhanced.dim2() != n_views) {
    fail("rb_enhanced has the wrong shape");
  }
  if (link_sinr.rows() != n_users || link_sinr.cols() != n_cells) {
    fail("link_sinr has the wrong shape");
  }
  for (uint8_t v : w.data()) {
    if (v > 1) fail("w entries must be 0 or 1");
  }
  for (int64_t b : rb_budget) {
    if (b <= 0) fail("RB budgets must be positive");
  }
  for (int64_t n : rb_basic.data()) {
    if (n < 1) fail("basic-view RB costs must be >= 1");
  }
  for (int64_t n : rb_enhanced.data()) {
    if (n < 1) fail("enhanced-view RB costs must be >= 1");
  }
  for (double s : link_sinr.data()) {
    if (!(s >= 0)) fail("link SINR must be non-negative");
  }
  if (sharing) {
    if (sharing->n_cells != n_cells || sharing->n_views != n_views ||
        sharing->groups.size() != static_cast<size_t>(n_cells) * n_views) {
      fail("sharing groups have the wrong shape");
    }
    for (const auto& g : sharing->groups) {
      for (size_t t = 0; t < g.size(); ++t) {
        if (g[t] < 0 || g[t] >= n_users) fail("sharing group user out of range");
        if (t > 0 && g[t] <= g[t - 1]) fail("sharing groups must be sorted");
      }
    }
  }
  for (int i = 0; i < n_users; ++i) {
    bool covered = false;
    for (int j = 0; j < n_cells && !covered; ++j) covered = Admissible(i, j);
    if (!covered) {
      throw Error(ErrorCode::kUncoveredUser,
                  "user " + std::to_string(i) +
                      " cannot receive the basic view from any cell");
    }
  }
}

double Objective(const Instance& instance, const Solution& solution) {
  double total = 0.0;
  for (int i = 0; i < instance.n_users; ++i) {
    const int j = solution.assoc[i];
    for (int k = 0; k < instance.n_views; ++k) {
      if (instance.w(i, j, k)) total += solution.alloc(i, k);
    }
  }
  return total;
}

std::vector<double> PerUserReward(const Instance& instance,
                                  const Solution& solution) {
  std::vector<double> rewards(instance.n_users, 0.0);
  for (int i = 0; i < instance.n_users; ++i) {
    const int j = solution.assoc[i];
    for (int k = 0; k < instance.n_views; ++k) {
      if (instance.w(i, j, k)) rewards[i] += solution.alloc(i, k);
    }
  }
  return rewards;
}

namespace {

struct CellUsage {
  int64_t basic = 0;
  double enhanced = 0.0;
};

// Assumes assoc entries are valid cell indices.
std::vector<CellUsage> ComputeUsage(const Instance& instance,
                                    const Solution& solution, Mode mode) {
  const bool multicast = mode == Mode::kMulticast && instance.sharing;
  std::vector<CellUsage> usage(instance.n_cells);
  // Largest alloc * N^e among sharing-group members, per (cell, view).
  Matrix<double> group_max(multicast ? instance.n_cells : 0,
                           multicast ? instance.n_views : 0, 0.0);
  for (int i = 0; i < instance.n_users; ++i) {
    const int j = solution.assoc[i];
    usage[j].basic = std::max(usage[j].basic, instance.rb_basic(i, j));
    for (int k = 0; k < instance.n_views; ++k) {
      const double y = solution.alloc(i, k);
      if (y == 0.0) continue;
      const double cost = y * static_cast<double>(instance.rb_enhanced(i, j, k));
      if (multicast && instance.sharing->Contains(j, k, i)) {
        group_max(j, k) = std::max(group_max(j, k), cost);
      } else {
        usage[j].enhanced += cost;
      }
    }
  }
  if (multicast) {
    for (int j = 0; j < instance.n_cells; ++j) {
      for (int k = 0; k < instance.n_views; ++k) {
        usage[j].enhanced += group_max(j, k);
      }
    }
  }
  return usage;
}

bool ShapeMatches(const Instance& instance, const Solution& solution) {
  return static_cast<int>(solution.assoc.size()) == instance.n_users &&
         solution.alloc.rows() == instance.n_users &&
         solution.alloc.cols() == instance.n_views;
}

}  // namespace

std::vector<double> RbUsage(const Instance& instance, const Solution& solution,
                            Mode mode) {
  if (!ShapeMatches(instance, solution)) {
    throw Error(ErrorCode::kInvalidInstance,
                "solution shape does not match the instance");
  }
  std::vector<double> out;
  out.reserve(instance.n_cells);
  for (const CellUsage& u : ComputeUsage(instance, solution, mode)) {
    out.push_back(static_cast<double>(u.basic) + u.enhanced);
  }
  return out;
}

FeasibilityReport IsFeasible(const Instance& instance,
                             const Solution& solution, Mode mode) {
  FeasibilityReport report;
  auto add = [&](ViolationKind kind, int i, int j, int k, std::string msg) {
    report.feasible = false;
    report.violations.push_back({kind, i, j, k, std::move(msg)});
  };
  if (!ShapeMatches(instance, solution)) {
    add(ViolationKind::kShape, -1, -1, -1,
        "solution shape does not match the instance");
    return report;
  }
  bool assoc_ok = true;
  for (int i = 0; i < instance.n_users; ++i) {
    const int j = solution.assoc[i];
    if (j < 0 || j >= instance.n_cells) {
      add(ViolationKind::kAssociation, i, j, -1,
          "user " + std::to_string(i) + " is not associated with exactly one "
          "valid cell (got " + std::to_string(j) + ")");
      assoc_ok = false;
    }
  }
  for (int i = 0; i < instance.n_users; ++i) {
    for (int k = 0; k < instance.n_views; ++k) {
      const double y = solution.alloc(i, k);
      if (!(y >= 0.0 && y <= 1.0)) {
        add(ViolationKind::kBounds, i, -1, k,
            "alloc(" + std::to_string(i) + ", " + std::to_string(k) +
                ") = " + std::to_string(y) + " is outside [0, 1]");
      }
      const int j = solution.assoc[i];
      if (y > 0.0 && j >= 0 && j < instance.n_cells && !instance.w(i, j, k)) {
        add(ViolationKind::kMask, i, j, k,
            "user " + std::to_string(i) + " receives view " +
                std::to_string(k) + " which cell " + std::to_string(j) +
                " cannot serve (w = 0)");
      }
    }
  }
  if (!assoc_ok) return report;
  const auto usage = ComputeUsage(instance, solution, mode);
  for (int j = 0; j < instance.n_cells; ++j) {
    const double slack = static_cast<double>(instance.rb_budget[j]) -
                         static_cast<double>(usage[j].basic);
    if (usage[j].enhanced > slack + kBudgetTolerance) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "cell " << j << " uses " << usage[j].basic << " + "
          << usage[j].enhanced << " RBs, budget " << instance.rb_budget[j];
      add(ViolationKind::kBudget, -1, j, -1, msg.str());
    }
  }
  return report;
}

std::string FeasibilityReport::Render() const {
  if (feasible) return "feasible\n";
  static constexpr const char* kNames[] = {"shape", "association", "mask",
                                           "bounds", "budget"};
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << "[" << kNames[static_cast<int>(v.kind)] << "] " << v.message
        << "\n";
  }
  return out.str();
}

RoundingResult RoundDiscrete(const Instance& instance,
                             const Solution& solution, int levels, Mode mode) {
  if (levels < 1) throw Error(ErrorCode::kDomain, "level count must be >= 1");
  const FeasibilityReport pre = IsFeasible(instance, solution, mode);
  if (!pre.feasible) {
    throw Error(ErrorCode::kInvalidInstance,
                "rounding needs a feasible solution:\n" + pre.Render());
  }
  const double f = static_cast<double>(levels);

  RoundingResult result{solution, 0};
  Solution& out = result.solution;
  for (double& y : out.alloc.data()) y = std::round(y * f) / f;

  Matrix<uint8_t> repaired(instance.n_users, instance.n_views, 0);
  for (int j = 0; j < instance.n_cells; ++j) {
    auto over_budget = [&] {
      const auto usage = ComputeUsage(instance, out, mode)[j];
      return usage.enhanced > static_cast<double>(instance.rb_budget[j]) -
                                  static_cast<double>(usage.basic) +
                                  kBudgetTolerance;
    };
    while (over_budget()) {
      int best_i = -1;
      int best_k = -1;
      for (int i = 0; i < instance.n_users; ++i) {
        if (out.assoc[i] != j) continue;
        for (int k = 0; k < instance.n_views; ++k) {
          if (repaired(i, k) || !(out.alloc(i, k) > solution.alloc(i, k))) {
            continue;
          }
          if (best_i < 0 || instance.rb_enhanced(i, j, k) >
                                instance.rb_enhanced(best_i, j, best_k)) {
            best_i = i;
            best_k = k;
          }
        }
      }
      // With every upward move undone usage is back at or below the input.
      if (best_i < 0) break;
      out.alloc(best_i, best_k) =
          std::floor(solution.alloc(best_i, best_k) * f) / f;
      repaired(best_i, best_k) = 1;
      ++result.repairs;
    }
  }
  return result;
}

}  // namespace vrcell
