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

#include "vrcell/scenario.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "vrcell/error.h"
#include "vrcell/random.h"

namespace vrcell {
namespace {

// Portable draws; the standard distributions differ between libraries.
double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double StandardNormal(std::mt19937_64& rng) {
  double u = Uniform01(rng);
  while (u == 0.0) u = Uniform01(rng);
  const double v = Uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Point UniformInDisc(double radius, std::mt19937_64& rng) {
  const double r = radius * std::sqrt(Uniform01(rng));
  const double theta = 2.0 * std::numbers::pi * Uniform01(rng);
  return {r * std::cos(theta), r * std::sin(theta)};
}

Point HotspotPoint(double radius, double sigma, std::mt19937_64& rng) {
  while (true) {
    const Point p{sigma * StandardNormal(rng), sigma * StandardNormal(rng)};
    if (std::hypot(p.x, p.y) <= radius) return p;
  }
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kDomain, message);
}

// Smallest basic-view cost of `user` relative to each budget; true when some
// cell can serve it.
bool Covered(const Topology& topology, int user, const ChannelParams& channel,
             const ShadowField& shadow, std::span<const int64_t> budgets,
             double basic_bits) {
  for (int j = 0; j < topology.n_cells(); ++j) {
    const double rate =
        RatePerRb(Sinr(topology, user, j, channel, shadow), channel);
    if (rate <= 0) continue;
    if (RbsForPayload(basic_bits, rate) <= budgets[j]) return true;
  }
  return false;
}

}  // namespace

std::string_view TopologyKindName(TopologyKind kind) {
  return kind == TopologyKind::kHotspot ? "hotspot" : "uniform";
}

TopologyKind ParseTopologyKind(std::string_view name) {
  if (name == "hotspot") return TopologyKind::kHotspot;
  if (name == "uniform") return TopologyKind::kUniform;
  throw Error(ErrorCode::kParse,
              "unknown topology kind '" + std::string(name) + "'");
}

Point DrawUniformInDisc(double radius, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return UniformInDisc(radius, rng);
}

Topology GenerateTopology(const TopologyParams& params, uint64_t seed) {
  Require(params.n_cells > 0 && params.n_users > 0, "counts must be positive");
  Require(params.map_radius_m > 0, "map radius must be positive");
  Require(params.hotspot_sigma_m > 0, "hotspot sigma must be positive");
  Topology topology;
  topology.map_radius = params.map_radius_m;
  std::mt19937_64 cell_rng(DeriveSeed(seed, kCellStream));
  for (int j = 0; j < params.n_cells; ++j) {
    topology.cells.push_back(
        params.kind == TopologyKind::kHotspot
            ? HotspotPoint(params.map_radius_m, params.hotspot_sigma_m, cell_rng)
            : UniformInDisc(params.map_radius_m, cell_rng));
  }
  std::mt19937_64 user_rng(DeriveSeed(seed, kUserStream));
  for (int i = 0; i < params.n_users; ++i) {
    topology.users.push_back(UniformInDisc(params.map_radius_m, user_rng));
  }
  return topology;
}

DemandSet GenerateDemands(int n_users, int n_views, int views_per_user,
                          double skew, uint64_t seed) {
  Require(n_users >= 0 && n_views >= 0, "counts must be non-negative");
  Require(views_per_user >= 0 && views_per_user <= n_views,
          "views_per_user must lie in [0, n_views]");
  Require(skew >= 0 && std::isfinite(skew), "popularity skew must be >= 0");
  std::vector<double> weight(n_views);
  for (int k = 0; k < n_views; ++k) weight[k] = std::pow(k + 1.0, -skew);

  std::mt19937_64 rng(DeriveSeed(seed, kDemandStream));
  DemandSet demands(n_users);
  for (int i = 0; i < n_users; ++i) {
    std::vector<int> pool(n_views);
    std::iota(pool.begin(), pool.end(), 0);
    for (int pick = 0; pick < views_per_user; ++pick) {
      double total = 0.0;
      for (int k : pool) total += weight[k];
      const double target = Uniform01(rng) * total;
      size_t chosen = pool.size() - 1;
      double acc = 0.0;
      for (size_t idx = 0; idx < pool.size(); ++idx) {
        acc += weight[pool[idx]];
        if (target < acc) {
          chosen = idx;
          break;
        }
      }
      demands[i].push_back(pool[chosen]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    std::sort(demands[i].begin(), demands[i].end());
  }
  return demands;
}

bool CachePlacement::Caches(int cell, int view) const {
  return std::binary_search(cache[cell].begin(), cache[cell].end(), view);
}

CachePlacement PlaceCaches(const DemandSet& demands, const Topology& topology,
                           int n_views, int capacity) {
  if (capacity < 1) throw Error(ErrorCode::kDomain, "cache size must be >= 1");
  const int n_cells = topology.n_cells();
  const int n_users = static_cast<int>(demands.size());
  if (static_cast<int64_t>(n_views) >
      static_cast<int64_t>(n_cells) * capacity) {
    throw Error(ErrorCode::kPlacement,
                std::to_string(n_views) + " views do not fit in " +
                    std::to_string(n_cells) + " caches of size " +
                    std::to_string(capacity));
  }
  CachePlacement placement;
  placement.capacity = capacity;
  placement.cache.assign(n_cells, {});

  for (int k = 0; k < n_views; ++k) {
    int target = 0;
    for (int j = 1; j < n_cells; ++j) {
      if (placement.cache[j].size() < placement.cache[target].size()) target = j;
    }
    placement.cache[target].push_back(k);
  }

  const int neighbourhood =
      n_cells > 0 ? (n_users + n_cells - 1) / n_cells : 0;
  std::vector<int> users(n_users);
  for (int j = 0; j < n_cells; ++j) {
    std::iota(users.begin(), users.end(), 0);
    std::stable_sort(users.begin(), users.end(), [&](int a, int b) {
      return Distance(topology.users[a], topology.cells[j]) <
             Distance(topology.users[b], topology.cells[j]);
    });
    std::vector<int> count(n_views, 0);
    for (int n = 0; n < neighbourhood; ++n) {
      for (int k : demands[users[n]]) ++count[k];
    }
    std::vector<int> order(n_views);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return count[a] > count[b]; });
    std::vector<int>& cache = placement.cache[j];
    for (int k : order) {
      if (static_cast<int>(cache.size()) >= capacity) break;
      if (std::find(cache.begin(), cache.end(), k) == cache.end()) {
        cache.push_back(k);
      }
    }
    std::sort(cache.begin(), cache.end());
  }
  return placement;
}

SharingGroups BuildSharingGroups(const DemandSet& demands,
                                 const CachePlacement& placement, int n_views,
                                 double fraction, uint64_t seed) {
  Require(fraction >= 0 && fraction <= 1, "shareable fraction must be in [0, 1]");
  const int n_cells = static_cast<int>(placement.cache.size());
  SharingGroups groups(n_cells, n_views);
  std::mt19937_64 rng(DeriveSeed(seed, kSharingStream));
  for (int i = 0; i < static_cast<int>(demands.size()); ++i) {
    for (int k = 0; k < n_views; ++k) {
      const bool shareable = Uniform01(rng) < fraction;
      if (!shareable ||
          !std::binary_search(demands[i].begin(), demands[i].end(), k)) {
        continue;
      }
      for (int j = 0; j < n_cells; ++j) {
        if (placement.Caches(j, k)) groups.group(j, k).push_back(i);
      }
    }
  }
  return groups;
}

Instance BuildInstance(const Topology& topology, const DemandSet& demands,
                       const CachePlacement& placement,
                       const ChannelParams& channel,
                       std::span<const int64_t> budgets, double basic_bits,
                       std::span<const double> view_bits,
                       std::optional<SharingGroups> sharing, uint64_t seed) {
  const int n_users = topology.n_users();
  const int n_cells = topology.n_cells();
  const int n_views = static_cast<int>(view_bits.size());
  if (static_cast<int>(demands.size()) != n_users ||
      static_cast<int>(placement.cache.size()) != n_cells ||
      static_cast<int>(budgets.size()) != n_cells) {
    throw Error(ErrorCode::kInvalidInstance,
                "topology, demands, caches and budgets disagree on counts");
  }
  for (const auto& views : demands) {
    for (int k : views) {
      if (k < 0 || k >= n_views) {
        throw Error(ErrorCode::kInvalidInstance, "demanded view out of range");
      }
    }
  }
  RbCostTables tables =
      BuildRbTables(topology, channel, basic_bits, view_bits, seed);

  Instance instance;
  instance.n_users = n_users;
  instance.n_cells = n_cells;
  instance.n_views = n_views;
  instance.w = Tensor3<uint8_t>(n_users, n_cells, n_views, 0);
  for (int i = 0; i < n_users; ++i) {
    for (int j = 0; j < n_cells; ++j) {
      for (int k : demands[i]) {
        if (placement.Caches(j, k)) instance.w(i, j, k) = 1;
      }
    }
  }
  instance.rb_budget.assign(budgets.begin(), budgets.end());
  instance.rb_basic = std::move(tables.basic);
  instance.rb_enhanced = std::move(tables.enhanced);
  instance.link_sinr = std::move(tables.sinr);
  instance.sharing = std::move(sharing);
  instance.Validate();
  return instance;
}

double PoolInterferenceLoad(int64_t rb_budget, double system_bandwidth_hz,
                            const ChannelParams& channel) {
  Require(system_bandwidth_hz > 0, "system bandwidth must be positive");
  const double pool = system_bandwidth_hz / channel.rb_bandwidth_hz /
                      channel.rb_duration_s;
  return std::min(1.0, static_cast<double>(rb_budget) / pool);
}

void ScenarioConfig::Validate() const {
  Require(topology.n_cells > 0 && topology.n_users > 0 && n_views > 0,
          "M, S and E must be positive");
  Require(CacheSize() >= 1, "cache size must be >= 1");
  Require(ViewsPerUser() >= 0 && ViewsPerUser() <= n_views,
          "views_per_user must lie in [0, E]");
  Require(rb_budget > 0, "RB budget must be positive");
  Require(basic_bits > 0 && view_bits > 0, "payload sizes must be positive");
  Require(max_redraws >= 0, "max_redraws must be >= 0");
  channel.Validate();
}

Scenario AssembleScenario(const ScenarioConfig& config, uint64_t seed) {
  config.Validate();
  Scenario scenario;
  scenario.channel = config.channel;
  if (config.pool_interference) {
    scenario.channel.interference_load = PoolInterferenceLoad(
        config.rb_budget, config.system_bandwidth_hz, config.channel);
  }
  const ChannelParams& channel = scenario.channel;
  scenario.topology = GenerateTopology(config.topology, seed);
  Topology& topology = scenario.topology;

  const int n_users = topology.n_users();
  const int n_cells = topology.n_cells();
  const std::vector<int64_t> budgets(n_cells, config.rb_budget);
  const uint64_t shadow_seed = DeriveSeed(seed, kShadowStream);
  const ShadowField shadow = DrawShadowField(
      n_users, n_cells, channel.shadow_sigma_db, shadow_seed);
  const uint64_t redraw_seed = DeriveSeed(seed, kRedrawStream);
  for (int i = 0; i < n_users; ++i) {
    std::mt19937_64 rng(DeriveSeed(redraw_seed, static_cast<uint64_t>(i)));
    int attempts = 0;
    while (!Covered(topology, i, channel, shadow, budgets, config.basic_bits)) {
      if (attempts == config.max_redraws) {
        throw Error(ErrorCode::kUncoveredUser,
                    "user " + std::to_string(i) +
                        " is out of reach of every cell after " +
                        std::to_string(attempts) + " redraws");
      }
      topology.users[i] = UniformInDisc(topology.map_radius, rng);
      ++attempts;
    }
    scenario.redraws += attempts;
  }

  scenario.demands =
      GenerateDemands(n_users, config.n_views, config.ViewsPerUser(),
                      config.popularity_skew, seed);
  scenario.placement = PlaceCaches(scenario.demands, topology, config.n_views,
                                   config.CacheSize());
  std::optional<SharingGroups> sharing;
  if (config.shareable_fraction) {
    sharing = BuildSharingGroups(scenario.demands, scenario.placement,
                                 config.n_views, *config.shareable_fraction,
                                 seed);
  }
  const std::vector<double> view_bits(config.n_views, config.view_bits);
  scenario.instance =
      BuildInstance(topology, scenario.demands, scenario.placement, channel,
                    budgets, config.basic_bits, view_bits, std::move(sharing),
                    shadow_seed);
  return scenario;
}

}  // namespace vrcell
