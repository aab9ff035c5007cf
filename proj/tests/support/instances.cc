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

#include "instances.h"

#include "vrcell/solvers.h"

#include <algorithm>
#include <cmath>

namespace vrcell::testing {

Instance RandomTinyInstance(std::mt19937_64& rng, const TinyOptions& options) {
  auto uniform_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::bernoulli_distribution wants(options.demand_probability);
  Instance inst;
  inst.n_users = uniform_int(1, options.max_users);
  inst.n_cells = uniform_int(1, options.max_cells);
  inst.n_views = uniform_int(1, options.max_views);
  const int m = inst.n_users, s = inst.n_cells, e = inst.n_views;
  inst.w = Tensor3<uint8_t>(m, s, e, 0);
  inst.rb_basic = Matrix<int64_t>(m, s, 0);
  inst.rb_enhanced = Tensor3<int64_t>(m, s, e, 0);
  inst.link_sinr = Matrix<double>(m, s, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < s; ++j) {
      inst.rb_basic(i, j) = uniform_int(50, 400);
      inst.link_sinr(i, j) =
          std::exp2(2000.0 / static_cast<double>(inst.rb_basic(i, j))) - 1.0;
      for (int k = 0; k < e; ++k) {
        inst.w(i, j, k) = wants(rng) ? 1 : 0;
        inst.rb_enhanced(i, j, k) = uniform_int(100, 600);
      }
    }
  }
  for (int j = 0; j < s; ++j) {
    int64_t max_basic = 0;
    double mean_view = 0.0;
    for (int i = 0; i < m; ++i) {
      max_basic = std::max(max_basic, inst.rb_basic(i, j));
      for (int k = 0; k < e; ++k) mean_view += inst.rb_enhanced(i, j, k);
    }
    mean_view /= m * e;
    const int views = uniform_int(1, 3);
    inst.rb_budget.push_back(max_basic +
                             static_cast<int64_t>(views * mean_view) +
                             uniform_int(0, 50));
  }
  if (options.sharing) {
    SharingGroups groups(s, e);
    std::bernoulli_distribution shares(0.6);
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < e; ++k) {
        for (int i = 0; i < m; ++i) {
          if (inst.w(i, j, k) && shares(rng)) groups.group(j, k).push_back(i);
        }
      }
    }
    inst.sharing = std::move(groups);
  }
  return inst;
}

std::vector<Instance> TinyInstanceSet(int count, uint64_t seed, bool sharing) {
  std::mt19937_64 rng(seed);
  TinyOptions options;
  options.sharing = sharing;
  std::vector<Instance> set;
  for (int n = 0; n < count; ++n) set.push_back(RandomTinyInstance(rng, options));
  return set;
}

Instance TwoCellExample(int64_t budget) {
  Instance inst;
  inst.n_users = 3;
  inst.n_cells = 2;
  inst.n_views = 4;
  inst.w = Tensor3<uint8_t>(3, 2, 4, 0);
  const std::vector<std::vector<int>> cache = {{0, 2}, {1, 2, 3}};
  const std::vector<std::vector<int>> demand = {{0, 2}, {0, 3}, {2}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k : demand[i]) {
        if (std::find(cache[j].begin(), cache[j].end(), k) != cache[j].end()) {
          inst.w(i, j, k) = 1;
        }
      }
    }
  }
  const int near_cell[] = {0, 0, 1};
  inst.rb_basic = Matrix<int64_t>(3, 2, 0);
  inst.rb_enhanced = Tensor3<int64_t>(3, 2, 4, 0);
  inst.link_sinr = Matrix<double>(3, 2, 0.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int64_t cost = near_cell[i] == j ? 1000 : 1500;
      inst.rb_basic(i, j) = cost;
      inst.link_sinr(i, j) = near_cell[i] == j ? 10.0 : 3.0;
      for (int k = 0; k < 4; ++k) inst.rb_enhanced(i, j, k) = cost;
    }
  }
  inst.rb_budget = {budget, budget};
  return inst;
}

double KnapsackVertexOptimum(const std::vector<double>& costs, double budget) {
  const int n = static_cast<int>(costs.size());
  if (budget < 0) return 0.0;
  double best = 0.0;
  for (uint32_t full = 0; full < (1u << n); ++full) {
    double spent = 0.0;
    int count = 0;
    for (int t = 0; t < n; ++t) {
      if (full & (1u << t)) {
        spent += costs[t];
        ++count;
      }
    }
    if (spent > budget) continue;
    best = std::max(best, static_cast<double>(count));
    // One fractional coordinate taking up exactly the rest of the budget.
    for (int f = 0; f < n; ++f) {
      if (full & (1u << f)) continue;
      const double y = (budget - spent) / costs[f];
      if (y > 0 && y < 1) best = std::max(best, count + y);
    }
  }
  return best;
}

Instance WithoutPenalizedPairs(const Instance& instance) {
  Instance out = instance;
  const int64_t nbar = ComputeNbar(instance);
  for (int i = 0; i < out.n_users; ++i) {
    for (int j = 0; j < out.n_cells; ++j) {
      if (out.rb_basic(i, j) > nbar) out.rb_basic(i, j) = out.rb_budget[j] + 1;
    }
  }
  return out;
}

}  // namespace vrcell::testing
