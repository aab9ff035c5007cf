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

#ifndef VRCELL_CHANNEL_H_
#define VRCELL_CHANNEL_H_

#include <cstdint>
#include <limits>
#include <span>

#include "vrcell/grid.h"
#include "vrcell/topology.h"

namespace vrcell {

// Propagation and resource-block parameters. The defaults are the WINNER-II
// A1 NLOS coefficients with a 5 GHz carrier, 1 W cells, thermal noise and an
// LTE-style 180 kHz x 0.5 ms resource block.
struct ChannelParams {
  double a = 36.8;                    // dB per decade of distance
  double b = 43.8;                    // dB intercept
  double c = 20.0;                    // dB per decade of fc / 5 GHz
  double fc_ghz = 5.0;
  double shadow_sigma_db = 0.0;       // 0 disables shadow fading
  double tx_power_w = 1.0;
  double noise_psd_dbm_hz = -174.0;
  double rb_bandwidth_hz = 180e3;
  double rb_duration_s = 0.5e-3;
  // Probability that another cell transmits on the same resource block.
  // 1 treats every other cell as a full-power interferer on every RB.
  double interference_load = 1.0;

  // Throws Error(kDomain) when an invariant does not hold.
  void Validate() const;

  bool operator==(const ChannelParams&) const = default;
};

// Per-link shadow fading in dB, indexed (user, cell).
using ShadowField = Matrix<double>;

// RB costs of the basic view (user, cell) and of each enhanced view
// (user, cell, view), plus the link SINR used for tie-breaking.
struct RbCostTables {
  Matrix<int64_t> basic;
  Tensor3<int64_t> enhanced;
  Matrix<double> sinr;
};

// Cost assigned to a link whose rate is zero. Larger than any RB budget.
inline constexpr int64_t kUnreachableRbCost =
    std::numeric_limits<int32_t>::max();

// a*log10(d) + b + c*log10(fc/5) + shadow, in dB. Throws kDomain for d <= 0.
double PathLossDb(double distance_m, const ChannelParams& params,
                  double shadow_db = 0.0);

// Linear channel gain 10^(-loss/10).
double GainFromLossDb(double loss_db);

// Noise power in watts over one resource block.
double NoisePowerW(const ChannelParams& params);

// SINR of `user` served by `serving_cell`. Interference is the load-weighted
// sum over all other cells. `shadow` may be empty (no fading).
double Sinr(const Topology& topology, int user, int serving_cell,
            const ChannelParams& params, const ShadowField& shadow = {});

// Bits carried by one RB: rb_duration * rb_bandwidth * log2(1 + sinr).
double RatePerRb(double sinr, const ChannelParams& params);

// ceil(payload / bits_per_rb), at least 1. Throws kUnreachableUser when
// bits_per_rb <= 0.
int64_t RbsForPayload(double payload_bits, double bits_per_rb);

// Draws i.i.d. N(0, sigma^2) shadow fading for every link, user-major.
ShadowField DrawShadowField(int n_users, int n_cells, double sigma_db,
                            uint64_t seed);

// Fills the RB cost tables for every (user, cell[, view]). Throws
// kUnreachableUser if some user has zero rate to every cell.
RbCostTables BuildRbTables(const Topology& topology,
                           const ChannelParams& params, double basic_bits,
                           std::span<const double> view_bits, uint64_t seed);

}  // namespace vrcell

#endif  // VRCELL_CHANNEL_H_
