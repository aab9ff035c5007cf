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

#ifndef VRCELL_PROBLEM_H_
#define VRCELL_PROBLEM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vrcell/grid.h"

namespace vrcell {

// How enhanced views are charged against a cell's RB budget.
enum class Mode { kUnicast, kMulticast };

std::string_view ModeName(Mode mode);
// Throws Error(kParse) for anything but "unicast" / "multicast".
Mode ParseMode(std::string_view name);

// Users that can receive enhanced view k from cell j in one transmission.
// Indexed by j * n_views + k; each list is sorted and duplicate-free.
struct SharingGroups {
  int n_cells = 0;
  int n_views = 0;
  std::vector<std::vector<int>> groups;

  SharingGroups() = default;
  SharingGroups(int cells, int views)
      : n_cells(cells), n_views(views),
        groups(static_cast<size_t>(cells) * views) {}

  std::vector<int>& group(int cell, int view) {
    return groups[static_cast<size_t>(cell) * n_views + view];
  }
  const std::vector<int>& group(int cell, int view) const {
    return groups[static_cast<size_t>(cell) * n_views + view];
  }
  bool Contains(int cell, int view, int user) const;

  bool operator==(const SharingGroups&) const = default;
};

// Joint association / enhanced-view allocation problem.
//
// w(i, j, k) is 1 iff user i wants view k and cell j caches it. Cell j owns
// rb_budget[j] RBs; broadcasting the basic view costs the maximum rb_basic
// over the users it serves, and delivering view k to user i at fraction y
// costs y * rb_enhanced(i, j, k).
struct Instance {
  int n_users = 0;
  int n_cells = 0;
  int n_views = 0;
  Tensor3<uint8_t> w;
  std::vector<int64_t> rb_budget;
  Matrix<int64_t> rb_basic;
  Tensor3<int64_t> rb_enhanced;
  // Link quality used only to break ties ("best SINR").
  Matrix<double> link_sinr;
  std::optional<SharingGroups> sharing;

  // A cell is admissible for a user when it can at least broadcast the
  // basic view to that user.
  bool Admissible(int user, int cell) const {
    return rb_basic(user, cell) <= rb_budget[cell];
  }
  // Sum over k of w(i, j, k).
  int RewardCount(int user, int cell) const;

  // Checks shapes, value ranges, sharing indices and that every user has at
  // least one admissible cell. Throws Error(kInvalidInstance) or
  // Error(kUncoveredUser).
  void Validate() const;

  bool operator==(const Instance&) const = default;
};

// assoc[i] is the serving cell of user i; alloc(i, k) is the delivered
// fraction of view k (the cell is implied by assoc).
struct Solution {
  std::vector<int> assoc;
  Matrix<double> alloc;

  Solution() = default;
  Solution(int n_users, int n_views)
      : assoc(n_users, 0), alloc(n_users, n_views, 0.0) {}

  bool operator==(const Solution&) const = default;
};

// Absolute slack allowed on the fractional RB sum of a cell.
inline constexpr double kBudgetTolerance = 1e-9;

double Objective(const Instance& instance, const Solution& solution);

// Per-user reward sum_k alloc(i, k) * w(i, assoc(i), k).
std::vector<double> PerUserReward(const Instance& instance,
                                  const Solution& solution);

// RBs used by every cell. An empty cell uses nothing. Multicast mode charges
// each sharing group once at its largest member cost; without sharing groups
// it equals unicast.
std::vector<double> RbUsage(const Instance& instance, const Solution& solution,
                            Mode mode);

enum class ViolationKind { kShape, kAssociation, kMask, kBounds, kBudget };

struct Violation {
  ViolationKind kind;
  int user = -1;
  int cell = -1;
  int view = -1;
  std::string message;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;

  // One diagnostic line per violation.
  std::string Render() const;
};

FeasibilityReport IsFeasible(const Instance& instance,
                             const Solution& solution,
                             Mode mode = Mode::kUnicast);

struct RoundingResult {
  Solution solution;
  // Number of entries pushed back down to restore a cell budget.
  int repairs = 0;
};

// Snaps every allocation to the nearest multiple of 1/levels, then rounds
// entries back down (most expensive first) in any cell whose budget the
// upward rounding broke. The input must be feasible.
RoundingResult RoundDiscrete(const Instance& instance,
                             const Solution& solution, int levels,
                             Mode mode = Mode::kUnicast);

}  // namespace vrcell

#endif  // VRCELL_PROBLEM_H_
