/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "boxrot/error.hpp"
#include "boxrot/geometry.hpp"
#include "boxrot/ruloss.hpp"

using namespace boxrot;

namespace {

RuParams with_delta(double deg) {
  RuParams p;
  p.delta = deg_to_rad(deg);
  return p;
}

// max(0.5, 1 + (1 - cos 4t) / (2 cos 4d - 2)) written out for t in [0, 45] deg.
double oracle(double t_deg, double d_deg) {
  const double t = t_deg * std::acos(-1.0) / 180.0;
  const double d = d_deg * std::acos(-1.0) / 180.0;
  return std::max(0.5, 1.0 + (1.0 - std::cos(4.0 * t)) / (2.0 * std::cos(4.0 * d) - 2.0));
}

}  // namespace

TEST(Certainty, Examples) {
  for (double d : {10.0, 15.0, 30.0, 45.0}) {
    EXPECT_NEAR(certainty(0.0, with_delta(d)), 1.0, 1e-12);
    EXPECT_NEAR(certainty(deg_to_rad(d), with_delta(d)), 0.5, 1e-12);
  }
  EXPECT_NEAR(certainty(deg_to_rad(22.5), with_delta(45.0)), 0.75, 1e-12);
  EXPECT_EQ(certainty(deg_to_rad(45.0), with_delta(10.0)), 0.5);
  EXPECT_NEAR(1.0 + (1.0 - std::cos(deg_to_rad(180.0))) / (2.0 * std::cos(deg_to_rad(40.0)) - 2.0), -3.2743,
              1e-4);
}

TEST(Certainty, MatchesFormulaAndPeriodicity) {
  for (double d : {5.0, 10.0, 20.0, 45.0}) {
    const RuParams p = with_delta(d);
    for (int i = 0; i <= 450; ++i) {
      const double deg = 0.1 * i;
      EXPECT_NEAR(certainty(deg_to_rad(deg), p), oracle(deg, d), 1e-12) << deg;
      for (int k = -3; k <= 3; ++k) {
        EXPECT_NEAR(certainty(deg_to_rad(deg + 90.0 * k), p), certainty(deg_to_rad(deg), p), 1e-12);
      }
      EXPECT_NEAR(certainty(deg_to_rad(-deg), p), certainty(deg_to_rad(deg), p), 1e-12);
    }
  }
}

TEST(Certainty, DeltaValidation) {
  EXPECT_THROW(certainty(0.1, with_delta(0.0)), InvalidArgument);
  EXPECT_THROW(certainty(0.1, with_delta(50.0)), InvalidArgument);
}

TEST(RegressionLossActive, Examples) {
  const RuParams p = with_delta(10.0);
  EXPECT_TRUE(regression_loss_active(0.9, 0.0, p));
  EXPECT_FALSE(regression_loss_active(0.6, deg_to_rad(45.0), p));
  EXPECT_TRUE(regression_loss_active(0.4, deg_to_rad(45.0), p));
  EXPECT_FALSE(regression_loss_active(1.0, 0.0, p));
  EXPECT_THROW(regression_loss_active(1.5, 0.0, p), InvalidArgument);
  EXPECT_THROW(regression_loss_active(-0.1, 0.0, p), InvalidArgument);
}

TEST(RuMask, Batch) {
  const RuParams p = with_delta(10.0);
  EXPECT_TRUE(ru_mask({}, {}, p).empty());
  const std::vector<double> one_iou = {0.7};
  const std::vector<double> one_theta = {0.2};
  EXPECT_EQ(ru_mask(one_iou, one_theta, p)[0], regression_loss_active(0.7, 0.2, p));
  const std::vector<double> two = {0.1, 0.2};
  EXPECT_THROW(ru_mask(one_iou, two, p), InvalidArgument);

  // Gated-off count grows as theta moves from 0 toward 45 degrees.
  std::size_t prev = 0;
  for (int deg = 0; deg <= 45; ++deg) {
    std::vector<double> ious(100, 0.7);
    std::vector<double> thetas(100);
    for (int i = 0; i < 100; ++i) thetas[i] = deg_to_rad(deg * (i + 1) / 100.0);
    const std::vector<bool> m = ru_mask(ious, thetas, p);
    const auto off = static_cast<std::size_t>(std::count(m.begin(), m.end(), false));
    EXPECT_GE(off, prev);
    prev = off;
  }
  EXPECT_GT(prev, 0u);
}
