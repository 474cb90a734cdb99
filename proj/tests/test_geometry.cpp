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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "boxrot/error.hpp"
#include "boxrot/geometry.hpp"

using namespace boxrot;

namespace {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon triangle() { return Polygon({{0, 0}, {1, 0}, {0, 1}}); }

void expect_box_near(const AABox& b, double x0, double y0, double x1, double y1, double tol) {
  EXPECT_NEAR(b.xmin(), x0, tol);
  EXPECT_NEAR(b.ymin(), y0, tol);
  EXPECT_NEAR(b.xmax(), x1, tol);
  EXPECT_NEAR(b.ymax(), y1, tol);
}

}  // namespace

TEST(AABox, RejectsDegenerateAndNonFinite) {
  EXPECT_THROW(AABox(0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(AABox(0, 0, 1, -1), InvalidArgument);
  EXPECT_THROW(AABox(0, 0, NAN, 1), InvalidArgument);
  EXPECT_THROW(AABox(0, 0, INFINITY, 1), InvalidArgument);
  const AABox b = AABox::from_xywh(10, 20, 30, 40);
  EXPECT_EQ(b, AABox(10, 20, 40, 60));
  EXPECT_DOUBLE_EQ(b.area(), 1200.0);
}

TEST(BBoxOf, Examples) {
  EXPECT_EQ(bbox_of(unit_square()), AABox(0, 0, 1, 1));
  EXPECT_EQ(bbox_of(triangle()), AABox(0, 0, 1, 1));
  // 4096-gon on the ellipse inscribed in (0,0,2,1).
  const int m = 4096;
  std::vector<Point2> pts;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * i / m;
    pts.push_back({1.0 + std::cos(t), 0.5 + 0.5 * std::sin(t)});
  }
  expect_box_near(bbox_of(Polygon(pts)), 0, 0, 2, 1, 1e-4);
}

TEST(RotatePolygon, Examples) {
  const Polygon sq = unit_square();
  const Polygon same = rotate_polygon(sq, Rotation(0.0, {3, 4}));
  for (std::size_t i = 0; i < sq.size(); ++i) {
    EXPECT_EQ(same[i].x, sq[i].x);
    EXPECT_EQ(same[i].y, sq[i].y);
  }

  // By hand: p -> c + [[0,-1],[1,0]](p - c) with c = (0.5, 0.5).
  const Polygon r = rotate_polygon(triangle(), Rotation(deg_to_rad(90.0), {0.5, 0.5}));
  const std::vector<Point2> want = {{1, 0}, {1, 1}, {0, 0}};
  ASSERT_EQ(r.size(), 3u);
  for (const Point2& w : want) {
    bool found = false;
    for (const Point2& p : r.vertices()) {
      found = found || (std::abs(p.x - w.x) < 1e-12 && std::abs(p.y - w.y) < 1e-12);
    }
    EXPECT_TRUE(found) << w.x << "," << w.y;
  }

  const Polygon full = rotate_polygon(sq, Rotation(2.0 * std::numbers::pi, {0.3, 0.7}));
  for (std::size_t i = 0; i < sq.size(); ++i) {
    EXPECT_NEAR(full[i].x, sq[i].x, 1e-9);
    EXPECT_NEAR(full[i].y, sq[i].y, 1e-9);
  }
}

TEST(Rotation, InverseAndCanonicalAngle) {
  const Rotation r(deg_to_rad(37.0), {2, -1});
  const Point2 p{5.5, 3.25};
  const Point2 q = r.inverse().apply(r.apply(p));
  EXPECT_NEAR(q.x, p.x, 1e-12);
  EXPECT_NEAR(q.y, p.y, 1e-12);
  EXPECT_NEAR(canonical_angle(3.0 * std::numbers::pi), std::numbers::pi, 1e-12);
  EXPECT_NEAR(canonical_angle(-std::numbers::pi), std::numbers::pi, 1e-12);
  EXPECT_TRUE(Rotation(0.0, {}).is_identity());
}

TEST(IouAabb, Examples) {
  const AABox b(0, 0, 2, 2);
  EXPECT_DOUBLE_EQ(iou_aabb(b, b), 1.0);
  EXPECT_NEAR(iou_aabb(b, AABox(1, 1, 3, 3)), 1.0 / 7.0, 1e-15);
  EXPECT_EQ(iou_aabb(AABox(0, 0, 1, 1), AABox(2, 2, 3, 3)), 0.0);
}

TEST(PolygonArea, Examples) {
  EXPECT_DOUBLE_EQ(polygon_area(unit_square()), 1.0);
  EXPECT_DOUBLE_EQ(polygon_area(triangle()), 0.5);
  const int m = 4096;
  std::vector<Point2> pts;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * i / m;
    pts.push_back({std::cos(t), std::sin(t)});
  }
  const double oracle = 0.5 * m * std::sin(2.0 * std::numbers::pi / m);
  EXPECT_NEAR(polygon_area(Polygon(pts)), oracle, 1e-12);
  EXPECT_NEAR(polygon_area(Polygon(pts)), std::numbers::pi, 1e-5);
}

TEST(PolygonArea, ClockwiseInputIsNormalized) {
  const Polygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(signed_area(cw.vertices()), 0.0);
}

TEST(Polygon, RejectsSelfIntersection) {
  EXPECT_THROW(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidArgument);
  EXPECT_THROW(Polygon({{0, 0}, {1, 0}}), InvalidArgument);
}

TEST(Clip, Examples) {
  const Polygon sq = unit_square();
  const auto self = clip_polygon_to_convex(sq, sq);
  ASSERT_TRUE(self);
  EXPECT_NEAR(polygon_area(*self), 1.0, 1e-12);

  const auto part = clip_polygon_to_convex(box_polygon(AABox(0, 0, 2, 2)), box_polygon(AABox(1, 1, 3, 3)));
  ASSERT_TRUE(part);
  EXPECT_NEAR(polygon_area(*part), 1.0, 1e-12);
  EXPECT_EQ(bbox_of(*part), AABox(1, 1, 2, 2));

  const Polygon diamond({{0.5, 0}, {1, 0.5}, {0.5, 1}, {0, 0.5}});
  const auto d = clip_polygon_to_convex(diamond, sq);
  ASSERT_TRUE(d);
  EXPECT_NEAR(polygon_area(*d), 0.5, 1e-12);

  EXPECT_FALSE(clip_polygon_to_convex(sq, box_polygon(AABox(5, 5, 6, 6))));
}

TEST(ConvexHull, DropsInteriorAndCollinear) {
  const std::vector<Point2> pts = {{0, 0}, {1, 0}, {0.5, 0}, {1, 1}, {0.3, 0.4}, {0, 1}};
  const Polygon h(convex_hull(pts));
  EXPECT_EQ(h.size(), 4u);
  EXPECT_TRUE(is_convex(h));
  EXPECT_DOUBLE_EQ(polygon_area(h), 1.0);
}

TEST(InscribedEllipse, Examples) {
  EXPECT_THROW(inscribed_ellipse(AABox(0, 0, 1, 1), 4), InvalidArgument);
  const Polygon oct = inscribed_ellipse(AABox(0, 0, 1, 1), 8);
  EXPECT_EQ(oct.size(), 8u);
  EXPECT_EQ(bbox_of(oct), AABox(0, 0, 1, 1));  // side midpoints placed exactly

  const Polygon e = inscribed_ellipse(AABox(0, 0, 2, 1), 4096);
  expect_box_near(bbox_of(e), 0, 0, 2, 1, 1e-4);
  EXPECT_NEAR(polygon_area(e), std::numbers::pi * 1.0 * 0.5, 1e-4);

  const EllipseFit fit = ellipse_fit(e, AABox(0, 0, 2, 1));
  EXPECT_LT(fit.max_deviation, 1e-6);
}

TEST(RotatedBoxBounds, MatchesRotatedCorners) {
  const AABox b(1, 2, 4, 3);
  for (double deg : {-170.0, -45.0, 0.0, 12.5, 90.0, 133.0}) {
    const Rotation r(deg_to_rad(deg), {0.7, -0.2});
    const AABox fast = rotated_box_bounds(b, r);
    const AABox slow = bbox_of(rotate_polygon(box_polygon(b), r));
    EXPECT_TRUE(fast.approx_equal(slow, 1e-12)) << deg;
  }
}
