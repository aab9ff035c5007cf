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

#ifndef VRCELL_SCENARIO_H_
#define VRCELL_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vrcell/channel.h"
#include "vrcell/problem.h"
#include "vrcell/topology.h"

namespace vrcell {

// Cell placement distribution; users are always uniform over the disc.
enum class TopologyKind { kHotspot, kUniform };

std::string_view TopologyKindName(TopologyKind kind);
// Throws Error(kParse) for anything but "hotspot" / "uniform".
TopologyKind ParseTopologyKind(std::string_view name);

struct TopologyParams {
  TopologyKind kind = TopologyKind::kHotspot;
  int n_cells = 10;
  int n_users = 50;
  double map_radius_m = 1000.0;
  // Standard deviation of each hotspot cell coordinate.
  double hotspot_sigma_m = 200.0;
};

// Cells and users are drawn from separate streams, each point in sequence,
// so growing n_users (or n_cells) keeps the existing points in place.
// Hotspot cells are Gaussian around the origin, resampled until inside the
// disc.
Topology GenerateTopology(const TopologyParams& params, uint64_t seed);

// Uniform point in the disc of radius `radius` around the origin.
Point DrawUniformInDisc(double radius, uint64_t seed);

// Sorted, distinct view indices per user.
using DemandSet = std::vector<std::vector<int>>;

// Every user picks views_per_user distinct views; each pick is Zipf(skew)
// over the views not yet picked (view 0 most popular). skew = 0 is uniform.
DemandSet GenerateDemands(int n_users, int n_views, int views_per_user,
                          double skew, uint64_t seed);

struct CachePlacement {
  int capacity = 0;                     // K
  std::vector<std::vector<int>> cache;  // sorted views per cell

  bool Caches(int cell, int view) const;
  bool operator==(const CachePlacement&) const = default;
};

// Phase 1 gives every view to the currently least-loaded cell (ties: lowest
// index). Phase 2 fills each cell up to K with the views most demanded by
// its ceil(M / S) nearest users (ties: lower view index). Throws
// Error(kPlacement) when E > S * K and Error(kDomain) when K < 1.
CachePlacement PlaceCaches(const DemandSet& demands, const Topology& topology,
                           int n_views, int capacity);

// Each (user, view) pair is shareable with probability `fraction`; group
// (j, k) holds the shareable users demanding k when cell j caches k.
SharingGroups BuildSharingGroups(const DemandSet& demands,
                                 const CachePlacement& placement, int n_views,
                                 double fraction, uint64_t seed);

// w(i, j, k) = [k in demands(i)] * [k in cache(j)], RB tables from the
// channel model.
Instance BuildInstance(const Topology& topology, const DemandSet& demands,
                       const CachePlacement& placement,
                       const ChannelParams& channel,
                       std::span<const int64_t> budgets, double basic_bits,
                       std::span<const double> view_bits,
                       std::optional<SharingGroups> sharing, uint64_t seed);

// Fraction of the system's RBs a single cell schedules: its budget over the
// RB count of `system_bandwidth_hz` per second.
double PoolInterferenceLoad(int64_t rb_budget, double system_bandwidth_hz,
                            const ChannelParams& channel);

struct ScenarioConfig {
  TopologyParams topology;
  int n_views = 5;
  std::optional<int> cache_size;       // default ceil(E / 2)
  std::optional<int> views_per_user;   // default E
  double popularity_skew = 0.8;
  ChannelParams channel;
  // Replace channel.interference_load by PoolInterferenceLoad().
  bool pool_interference = true;
  double system_bandwidth_hz = 100e6;
  int64_t rb_budget = 50'000;
  double basic_bits = 2e6;
  double view_bits = 2e6;
  // Builds sharing groups when set.
  std::optional<double> shareable_fraction;
  // Users that no cell can serve are redrawn at most this many times each.
  int max_redraws = 1000;

  int CacheSize() const { return cache_size.value_or((n_views + 1) / 2); }
  int ViewsPerUser() const { return views_per_user.value_or(n_views); }
  // Throws Error(kDomain) for invalid counts or parameters.
  void Validate() const;
};

struct Scenario {
  Topology topology;
  DemandSet demands;
  CachePlacement placement;
  ChannelParams channel;  // with the interference load actually used
  int redraws = 0;        // user positions replaced for coverage
  Instance instance;
};

// Full pipeline for one seed. Throws Error(kUncoveredUser) if a user stays
// out of every cell's reach after max_redraws attempts.
Scenario AssembleScenario(const ScenarioConfig& config, uint64_t seed);

}  // namespace vrcell

#endif  // VRCELL_SCENARIO_H_
