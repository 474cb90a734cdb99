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

#include <gtest/gtest.h>

#include "boxrot/eiou.hpp"
#include "boxrot/error.hpp"
#include "boxrot/shape_sampler.hpp"

using namespace boxrot;

namespace {

AABox rotated_bbox(const Polygon& poly, double theta, Point2 c) {
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const Point2& p : poly.vertices()) {
    const double x = cs * (p.x - c.x) - sn * (p.y - c.y);
    const double y = sn * (p.x - c.x) + cs * (p.y - c.y);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  return AABox(x0, y0, x1, y1);
}

double plain_iou(const AABox& a, const AABox& b) {
  const double w = std::max(0.0, std::min(a.xmax(), b.xmax()) - std::max(a.xmin(), b.xmin()));
  const double h = std::max(0.0, std::min(a.ymax(), b.ymax()) - std::max(a.ymin(), b.ymin()));
  return w * h / (a.area() + b.area() - w * h);
}

// Brute-force estimator written against the definition.
double oracle_eiou(const Polygon& shape, const AABox& box, const EiouConfig& cfg) {
  const SampleSet refs = sample_shapes(box, cfg.shapes, static_cast<std::size_t>(cfg.samples_per_angle));
  double total = 0.0;
  for (double t : cfg.thetas) {
    const AABox label = rotated_bbox(shape, t, box.center());
    double sum = 0.0;
    for (const Polygon& s : refs.shapes) sum += plain_iou(label, rotated_bbox(s, t, box.center()));
    total += sum / static_cast<double>(refs.shapes.size());
  }
  return 100.0 * total / static_cast<double>(cfg.thetas.size());
}

EiouConfig small_config() {
  EiouConfig cfg;
  cfg.samples_per_angle = 200;
  cfg.thetas = {deg_to_rad(5.0), deg_to_rad(20.0), deg_to_rad(40.0)};
  return cfg;
}

}  // namespace

TEST(Eiou, MatchesBruteForceOracle) {
  const AABox box(3, 4, 9, 7);
  const EiouConfig cfg = small_config();
  for (const Polygon& shape : {box_polygon(box), inscribed_ellipse(box, 256), sample_valid_shape(box, cfg.shapes, 12345)}) {
    EXPECT_NEAR(estimate_eiou_for_shape(shape, box, cfg).mean, oracle_eiou(shape, box, cfg), 1e-9);
  }
}

TEST(Eiou, NearZeroAngleGivesHundred) {
  EiouConfig cfg;
  cfg.samples_per_angle = 100;
  cfg.thetas = {1e-7};
  const AABox box(0, 0, 1, 1);
  EXPECT_NEAR(estimate_eiou_for_shape(box_polygon(box), box, cfg).mean, 100.0, 1e-4);
  cfg.thetas = {0.0};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Eiou, ConfigValidation) {
  EiouConfig cfg;
  cfg.samples_per_angle = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = EiouConfig{};
  cfg.thetas = {};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = EiouConfig{};
  cfg.thetas = {deg_to_rad(90.0)};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  EXPECT_EQ(default_theta_grid().size(), 45u);
}

TEST(Eiou, ShapeMustBelongToBox) {
  const AABox box(0, 0, 1, 1);
  EXPECT_THROW(estimate_eiou_for_shape(box_polygon(AABox(0, 0, 1, 0.9)), box, small_config()),
               InvalidArgument);
  EXPECT_THROW(estimate_eiou_for_method(MethodId::perfect(), box, small_config()), InvalidArgument);
}

TEST(Eiou, DefaultAnchorsOnSquare) {
  const AABox box(0, 0, 100, 100);
  const EiouConfig cfg;
  const CandidateSet cand(box, cfg);
  const double largest = estimate_eiou_for_shape(box_polygon(box), cand).mean;
  const double ellipse = estimate_eiou_for_shape(inscribed_ellipse(box, 4096), cand).mean;
  const double octagon = estimate_eiou_for_method(MethodId::octagon(0.5), cand, cfg.shapes).mean;
  EXPECT_NEAR(largest, 60.8, 3.0);
  EXPECT_NEAR(ellipse, 72.9, 3.0);
  EXPECT_GE(ellipse - largest, 8.0);
  EXPECT_GT(octagon, largest);
  EXPECT_LT(octagon, ellipse);
}

TEST(Eiou, MethodEqualsShapeForClosedForms) {
  const AABox box(0, 0, 60, 30);
  const EiouConfig cfg = small_config();
  const CandidateSet cand(box, cfg);
  EXPECT_NEAR(estimate_eiou_for_method(MethodId::largest(), cand, cfg.shapes).mean,
              estimate_eiou_for_shape(box_polygon(box), cand).mean, 1e-9);
  EXPECT_NEAR(estimate_eiou_for_method(MethodId::ellipse(), cand, cfg.shapes).mean,
              estimate_eiou_for_shape(inscribed_ellipse(box, 4096), cand).mean, 1e-3);
}

TEST(Eiou, JobsDoNotChangeResult) {
  const AABox box(0, 0, 40, 25);
  EiouConfig cfg = small_config();
  const double one = estimate_eiou_for_method(MethodId::ellipse(), box, cfg).mean;
  cfg.jobs = 4;
  const double four = estimate_eiou_for_method(MethodId::ellipse(), box, cfg).mean;
  EXPECT_EQ(one, four);
  const CandidateSet a(box, cfg);
  cfg.jobs = 1;
  const CandidateSet b(box, cfg);
  for (std::size_t t = 0; t < a.thetas().size(); ++t) {
    for (std::size_t k = 0; k < a.samples(); ++k) EXPECT_EQ(a.at(t)[k], b.at(t)[k]);
  }
}

TEST(Eiou, MirroredCandidatesReflectAboutCenterLine) {
  const AABox box(2, 0, 12, 5);
  const CandidateSet cand(box, small_config());
  const CandidateSet mir = cand.mirrored();
  const std::size_t n = cand.thetas().size();
  ASSERT_EQ(mir.thetas().size(), 2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    EXPECT_EQ(mir.thetas()[t], cand.thetas()[t]);
    EXPECT_EQ(mir.thetas()[n + t], -cand.thetas()[t]);
    for (std::size_t k = 0; k < cand.samples(); ++k) {
      const AABox& a = cand.at(t)[k];
      EXPECT_EQ(mir.at(t)[k], a);
      const AABox& b = mir.at(n + t)[k];
      EXPECT_NEAR(b.xmin(), 2.0 * box.center().x - a.xmax(), 1e-12);
      EXPECT_NEAR(b.xmax(), 2.0 * box.center().x - a.xmin(), 1e-12);
      EXPECT_EQ(b.ymin(), a.ymin());
      EXPECT_EQ(b.ymax(), a.ymax());
    }
  }
}
