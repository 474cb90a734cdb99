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

#ifndef BOXROT_GEOMETRY_HPP
#define BOXROT_GEOMETRY_HPP

// Planar primitives for label rotation.
//
// Coordinates follow the raster convention: x grows to the right, y grows
// downwards. A rotation by a positive angle applies the matrix
//
//     [ cos t  -sin t ]
//     [ sin t   cos t ]
//
// to (x, y), which appears clockwise on screen. Polygon vertices are stored
// in the order that makes the shoelace sum positive in these coordinates
// (counter-clockwise in the x/y plane, clockwise on screen).

#include <optional>
#include <span>
#include <vector>

namespace boxrot {

inline constexpr double kPi = 3.14159265358979323846;
// Absolute tolerance for geometric comparisons, in pixels.
inline constexpr double kGeomEps = 1e-9;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Axis-aligned box in corner form. Always non-degenerate and finite.
class AABox {
 public:
  // Throws InvalidArgument unless xmin < xmax, ymin < ymax and all finite.
  AABox(double xmin, double ymin, double xmax, double ymax);

  // COCO-style (x, y, w, h).
  static AABox from_xywh(double x, double y, double w, double h);
  static AABox from_center(Point2 center, double half_width, double half_height);

  double xmin() const { return xmin_; }
  double ymin() const { return ymin_; }
  double xmax() const { return xmax_; }
  double ymax() const { return ymax_; }

  double width() const { return xmax_ - xmin_; }
  double height() const { return ymax_ - ymin_; }
  double area() const { return width() * height(); }
  Point2 center() const { return {0.5 * (xmin_ + xmax_), 0.5 * (ymin_ + ymax_)}; }

  AABox translated(double dx, double dy) const;
  bool contains(const AABox& other, double eps = kGeomEps) const;
  bool approx_equal(const AABox& other, double eps = kGeomEps) const;

  friend bool operator==(const AABox&, const AABox&) = default;

 private:
  double xmin_;
  double ymin_;
  double xmax_;
  double ymax_;
};

// Rigid rotation about a pivot. The angle is kept in (-pi, pi].
class Rotation {
 public:
  Rotation() = default;
  Rotation(double theta, Point2 pivot);

  double theta() const { return theta_; }
  Point2 pivot() const { return pivot_; }
  double cos_theta() const { return cos_; }
  double sin_theta() const { return sin_; }
  bool is_identity() const { return theta_ == 0.0; }

  Point2 apply(Point2 p) const;
  Rotation inverse() const { return Rotation(-theta_, pivot_); }

 private:
  double theta_ = 0.0;
  Point2 pivot_{};
  double cos_ = 1.0;
  double sin_ = 0.0;
};

// Wraps an angle into (-pi, pi].
double canonical_angle(double theta);

// Simple polygon with at least three vertices and non-zero area.
class Polygon {
 public:
  // Validates finiteness, vertex count, non-zero area and simplicity
  // (O(n^2) edge test); reorders vertices to positive orientation.
  explicit Polygon(std::vector<Point2> vertices);

  // Skips the simplicity test. For polygons produced by construction
  // (hulls, rotations of valid polygons, analytic shapes); orientation is
  // still normalized and the other invariants still checked.
  static Polygon from_trusted(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  struct TrustedTag {};
  Polygon(std::vector<Point2> vertices, TrustedTag);

  std::vector<Point2> vertices_;
};

// Shoelace sum; positive for normalized polygons.
double signed_area(std::span<const Point2> pts);
double polygon_area(const Polygon& poly);

// Tightest axis-aligned box around the points.
AABox bbox_of(std::span<const Point2> pts);
AABox bbox_of(const Polygon& poly);

Point2 rotate_point(Point2 p, const Rotation& rot);
Polygon rotate_polygon(const Polygon& poly, const Rotation& rot);

// Axis-aligned box of the rotated corners of `box` (the box rotated as a
// rigid rectangle, then re-boxed).
AABox rotated_box_bounds(const AABox& box, const Rotation& rot);

double iou_aabb(const AABox& a, const AABox& b);

// Convex hull by monotone chain. Collinear points are dropped. Returns the
// hull in positive orientation; fewer than 3 points means the input was
// degenerate.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

bool is_convex(const Polygon& poly);

// Intersection of an arbitrary simple polygon with a convex clip polygon by
// sequential half-plane clipping. nullopt when the intersection has no area.
std::optional<Polygon> clip_polygon_to_convex(const Polygon& poly, const Polygon& clip);

// Corners of `box` as a polygon.
Polygon box_polygon(const AABox& box);

// m-vertex discretization of the ellipse inscribed in `box`, vertices at the
// uniform parameter angles 2*pi*k/m. Requires m >= 8.
Polygon inscribed_ellipse(const AABox& box, int m);

// Deviation of each vertex from the ellipse inscribed in `box`, measured in
// normalized polar form |sqrt(((x-xc)/a)^2 + ((y-yc)/b)^2) - 1|.
struct EllipseFit {
  double mean_deviation = 0.0;
  double max_deviation = 0.0;
};
EllipseFit ellipse_fit(const Polygon& poly, const AABox& box);

}  // namespace boxrot

#endif  // BOXROT_GEOMETRY_HPP
