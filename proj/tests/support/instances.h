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

#ifndef VRCELL_TESTS_SUPPORT_INSTANCES_H_
#define VRCELL_TESTS_SUPPORT_INSTANCES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "vrcell/problem.h"

namespace vrcell::testing {

struct TinyOptions {
  int max_users = 5;
  int max_cells = 3;
  int max_views = 3;
  double demand_probability = 0.7;
  bool sharing = false;
};

// Random instance with integer RB costs; each cell budget covers its
// largest basic cost plus one to three average enhanced views. link_sinr
// decreases with the basic cost, as it would for a real channel.
Instance RandomTinyInstance(std::mt19937_64& rng, const TinyOptions& options = {});

// The fixed tiny set shared by the exactness, approximation and dominance
// checks.
std::vector<Instance> TinyInstanceSet(int count, uint64_t seed,
                                      bool sharing = false);

// Two cells caching views {0, 2} and {1, 2, 3}; users want {0, 2}, {0, 3}
// and {2}. Users 0 and 1 sit next to cell 0, user 2 next to cell 1. Near
// links cost 1000 RBs, far links 1500, and each cell owns `budget` RBs.
Instance TwoCellExample(int64_t budget);

// Item costs of a single-cell knapsack; every item has reward 1.
// Returns the LP optimum by enumerating the vertices of
// {0 <= y <= 1, sum c y <= budget}: every vertex has at most one
// fractional coordinate, fixed by the budget equality.
double KnapsackVertexOptimum(const std::vector<double>& costs, double budget);

// Copy of `instance` in which every pair with N^b above N-bar is
// inadmissible, leaving the association space ELVA searches.
Instance WithoutPenalizedPairs(const Instance& instance);

}  // namespace vrcell::testing

#endif  // VRCELL_TESTS_SUPPORT_INSTANCES_H_
