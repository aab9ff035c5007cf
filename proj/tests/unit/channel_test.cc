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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "vrcell/channel.h"
#include "vrcell/error.h"
#include "vrcell/scenario.h"

namespace vrcell {
namespace {

// Reference values from tests/oracles/channel_oracle.py (50-digit mpmath).
constexpr double kLossAt250 = 132.04419231913098;
constexpr double kNoiseW = 7.1659290699629505e-16;
constexpr double kSinrFullLoad[] = {8.4179435009452981, 0.10380573943252816,
                                    0.011742405857002787};
constexpr int64_t kRbsFullLoad[] = {6869, 155961, 1319452};
constexpr double kSinrPoolLoad[] = {169.12652328796662, 2.278469621502688,
                                    0.25800252639104452};
constexpr int64_t kRbsPoolLoad[] = {2999, 12973, 67110};
constexpr double kSnrAt100 = 2539.3788311937502;
constexpr int64_t kRbsAt100 = 1965;
constexpr int64_t kRbsAt1000 = 36190;

Topology ThreeCells() {
  Topology t;
  t.cells = {{0, 0}, {300, 0}, {0, 400}};
  t.users = {{100, 50}};
  return t;
}

TEST(PathLoss, MatchesReference) {
  EXPECT_NEAR(PathLossDb(250.0, {}), kLossAt250, 1e-11);
}

TEST(PathLoss, CarrierTermVanishesAt5GHz) {
  ChannelParams p;
  p.fc_ghz = 10.0;
  EXPECT_NEAR(PathLossDb(250.0, p) - PathLossDb(250.0, {}),
              20.0 * std::log10(2.0), 1e-12);
}

TEST(PathLoss, ShadowAddsInDb) {
  EXPECT_NEAR(PathLossDb(250.0, {}, 3.5), kLossAt250 + 3.5, 1e-11);
}

TEST(PathLoss, RejectsNonPositiveDistance) {
  EXPECT_THROW(PathLossDb(0.0, {}), Error);
  EXPECT_THROW(PathLossDb(-1.0, {}), Error);
  EXPECT_THROW(PathLossDb(std::nan(""), {}), Error);
}

TEST(Noise, IntegratesPsdOverOneRb) {
  EXPECT_NEAR(NoisePowerW({}) / kNoiseW, 1.0, 1e-12);
}

TEST(Sinr, FullLoadMatchesReference) {
  const Topology t = ThreeCells();
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(Sinr(t, 0, j, {}) / kSinrFullLoad[j], 1.0, 1e-12) << j;
  }
}

TEST(Sinr, PartialLoadMatchesReference) {
  const Topology t = ThreeCells();
  ChannelParams p;
  p.interference_load = 0.045;
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(Sinr(t, 0, j, p) / kSinrPoolLoad[j], 1.0, 1e-12) << j;
  }
}

TEST(Sinr, SingleCellIsSnr) {
  Topology t;
  t.cells = {{0, 0}};
  t.users = {{100, 0}};
  EXPECT_NEAR(Sinr(t, 0, 0, {}) / kSnrAt100, 1.0, 1e-12);
}

TEST(RbTables, MatchReferenceCounts) {
  const Topology t = ThreeCells();
  const std::vector<double> views = {2e6, 4e6};
  const RbCostTables full = BuildRbTables(t, {}, 2e6, views, 1);
  ChannelParams p;
  p.interference_load = 0.045;
  const RbCostTables pool = BuildRbTables(t, p, 2e6, views, 1);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(full.basic(0, j), kRbsFullLoad[j]);
    EXPECT_EQ(pool.basic(0, j), kRbsPoolLoad[j]);
    EXPECT_EQ(pool.enhanced(0, j, 0), kRbsPoolLoad[j]);
    EXPECT_GE(pool.enhanced(0, j, 1), 2 * kRbsPoolLoad[j] - 1);
    EXPECT_LE(pool.enhanced(0, j, 1), 2 * kRbsPoolLoad[j]);
  }
}

TEST(RbTables, IsolatedLinks) {
  Topology t;
  t.cells = {{0, 0}};
  t.users = {{100, 0}, {1000, 0}};
  const RbCostTables tables = BuildRbTables(t, {}, 2e6, {}, 1);
  EXPECT_EQ(tables.basic(0, 0), kRbsAt100);
  EXPECT_EQ(tables.basic(1, 0), kRbsAt1000);
}

TEST(RbTables, CostGrowsWithDistance) {
  Topology t;
  t.cells = {{0, 0}};
  for (int n = 1; n <= 9; ++n) t.users.push_back({100.0 * n, 0});
  const RbCostTables tables = BuildRbTables(t, {}, 2e6, {}, 1);
  for (int i = 1; i < 9; ++i) {
    EXPECT_GE(tables.basic(i, 0), tables.basic(i - 1, 0));
  }
}

TEST(RbsForPayload, ExactMultiplesAreNotRoundedUp) {
  EXPECT_EQ(RbsForPayload(1000.0, 250.0), 4);
  EXPECT_EQ(RbsForPayload(1001.0, 250.0), 5);
  EXPECT_EQ(RbsForPayload(1.0, 250.0), 1);
}

TEST(RbsForPayload, ZeroRateIsUnreachable) {
  try {
    RbsForPayload(1000.0, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreachableUser);
  }
}

TEST(RbsForPayload, TinyRateSaturates) {
  EXPECT_EQ(RbsForPayload(2e6, 1e-12), kUnreachableRbCost);
}

TEST(ShadowField, SeededAndCentred) {
  const ShadowField a = DrawShadowField(200, 50, 4.0, 9);
  EXPECT_EQ(a, DrawShadowField(200, 50, 4.0, 9));
  double sum = 0.0, squares = 0.0;
  for (double v : a.data()) {
    sum += v;
    squares += v * v;
  }
  const double n = static_cast<double>(a.data().size());
  EXPECT_NEAR(sum / n, 0.0, 0.1);
  EXPECT_NEAR(std::sqrt(squares / n), 4.0, 0.1);
}

TEST(ChannelParams, ValidateRejectsBadValues) {
  ChannelParams p;
  p.interference_load = 1.5;
  EXPECT_THROW(p.Validate(), Error);
  p = {};
  p.rb_bandwidth_hz = 0;
  EXPECT_THROW(p.Validate(), Error);
  p = {};
  p.shadow_sigma_db = -1;
  EXPECT_THROW(p.Validate(), Error);
}

TEST(PoolLoad, FiftyThousandRbsInOneHundredMegahertz) {
  EXPECT_NEAR(PoolInterferenceLoad(50'000, 100e6, {}), 0.045, 1e-15);
}

}  // namespace
}  // namespace vrcell
