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

#include "vrcell/channel.h"

#include <cmath>
#include <random>
#include <string>

#include "vrcell/error.h"

namespace vrcell {

void ChannelParams::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kDomain, what);
  };
  require(fc_ghz > 0, "carrier frequency must be positive");
  require(rb_bandwidth_hz > 0, "RB bandwidth must be positive");
  require(rb_duration_s > 0, "RB duration must be positive");
  require(tx_power_w > 0, "transmit power must be positive");
  require(shadow_sigma_db >= 0, "shadow sigma must be non-negative");
  require(interference_load >= 0 && interference_load <= 1,
          "interference load must lie in [0, 1]");
}

double PathLossDb(double distance_m, const ChannelParams& params,
                  double shadow_db) {
  if (!(distance_m > 0) || !std::isfinite(distance_m)) {
    throw Error(ErrorCode::kDomain,
                "path loss needs a positive finite distance, got " +
                    std::to_string(distance_m));
  }
  return params.a * std::log10(distance_m) + params.b +
         params.c * std::log10(params.fc_ghz / 5.0) + shadow_db;
}

double GainFromLossDb(double loss_db) {
  return std::pow(10.0, -loss_db / 10.0);
}

double NoisePowerW(const ChannelParams& params) {
  return std::pow(10.0, (params.noise_psd_dbm_hz - 30.0) / 10.0) *
         params.rb_bandwidth_hz;
}

namespace {

double LinkGain(const Topology& topology, int user, int cell,
                const ChannelParams& params, const ShadowField& shadow) {
  const double d = Distance(topology.users[user], topology.cells[cell]);
  if (!(d > 0)) {
    throw Error(ErrorCode::kDomain, "user " + std::to_string(user) +
                                        " is collocated with cell " +
                                        std::to_string(cell));
  }
  const double x = shadow.rows() > 0 ? shadow(user, cell) : 0.0;
  return GainFromLossDb(PathLossDb(d, params, x));
}

}  // namespace

double Sinr(const Topology& topology, int user, int serving_cell,
            const ChannelParams& params, const ShadowField& shadow) {
  if (user < 0 || user >= topology.n_users() || serving_cell < 0 ||
      serving_cell >= topology.n_cells()) {
    throw Error(ErrorCode::kDomain, "user or cell index out of range");
  }
  double signal = 0.0;
  double interference = 0.0;
  for (int n = 0; n < topology.n_cells(); ++n) {
    const double received =
        params.tx_power_w * LinkGain(topology, user, n, params, shadow);
    if (n == serving_cell) {
      signal = received;
    } else {
      interference += received;
    }
  }
  return signal /
         (NoisePowerW(params) + params.interference_load * interference);
}

double RatePerRb(double sinr, const ChannelParams& params) {
  if (sinr < 0) throw Error(ErrorCode::kDomain, "SINR must be non-negative");
  return params.rb_duration_s * params.rb_bandwidth_hz * std::log2(1.0 + sinr);
}

int64_t RbsForPayload(double payload_bits, double bits_per_rb) {
  if (!(bits_per_rb > 0)) {
    throw Error(ErrorCode::kUnreachableUser,
                "link carries zero bits per resource block");
  }
  if (!(payload_bits > 0)) {
    throw Error(ErrorCode::kDomain, "payload must be positive");
  }
  const double quotient = std::ceil(payload_bits / bits_per_rb);
  if (quotient >= static_cast<double>(kUnreachableRbCost)) {
    return kUnreachableRbCost;
  }
  auto n = static_cast<int64_t>(quotient);
  // Division can round up past an exact multiple; keep the smallest n with
  // n * bits_per_rb >= payload.
  while (n > 1 && static_cast<double>(n - 1) * bits_per_rb >= payload_bits) --n;
  while (static_cast<double>(n) * bits_per_rb < payload_bits) ++n;
  return std::max<int64_t>(n, 1);
}

ShadowField DrawShadowField(int n_users, int n_cells, double sigma_db,
                            uint64_t seed) {
  ShadowField field(n_users, n_cells, 0.0);
  if (sigma_db <= 0) return field;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sigma_db);
  for (double& x : field.data()) x = normal(rng);
  return field;
}

RbCostTables BuildRbTables(const Topology& topology,
                           const ChannelParams& params, double basic_bits,
                           std::span<const double> view_bits, uint64_t seed) {
  params.Validate();
  const int n_users = topology.n_users();
  const int n_cells = topology.n_cells();
  const int n_views = static_cast<int>(view_bits.size());
  if (n_cells == 0) throw Error(ErrorCode::kDomain, "topology has no cells");
  if (!(basic_bits > 0)) throw Error(ErrorCode::kDomain, "basic size <= 0");
  for (double v : view_bits) {
    if (!(v > 0)) throw Error(ErrorCode::kDomain, "view size <= 0");
  }

  const ShadowField shadow =
      DrawShadowField(n_users, n_cells, params.shadow_sigma_db, seed);
  const double noise = NoisePowerW(params);

  RbCostTables tables{Matrix<int64_t>(n_users, n_cells),
                      Tensor3<int64_t>(n_users, n_cells, n_views),
                      Matrix<double>(n_users, n_cells)};
  std::vector<double> received(n_cells);
  for (int i = 0; i < n_users; ++i) {
    for (int j = 0; j < n_cells; ++j) {
      received[j] =
          params.tx_power_w * LinkGain(topology, i, j, params, shadow);
    }
    bool reachable = false;
    for (int j = 0; j < n_cells; ++j) {
      double interference = 0.0;
      for (int n = 0; n < n_cells; ++n) {
        if (n != j) interference += received[n];
      }
      const double sinr =
          received[j] / (noise + params.interference_load * interference);
      tables.sinr(i, j) = sinr;
      const double bits = RatePerRb(sinr, params);
      if (!(bits > 0)) {
        tables.basic(i, j) = kUnreachableRbCost;
        for (int k = 0; k < n_views; ++k) {
          tables.enhanced(i, j, k) = kUnreachableRbCost;
        }
        continue;
      }
      reachable = true;
      tables.basic(i, j) = RbsForPayload(basic_bits, bits);
      for (int k = 0; k < n_views; ++k) {
        tables.enhanced(i, j, k) = RbsForPayload(view_bits[k], bits);
      }
    }
    if (!reachable) {
      throw Error(ErrorCode::kUnreachableUser,
                  "user " + std::to_string(i) + " has zero rate to every cell");
    }
  }
  return tables;
}

}  // namespace vrcell
