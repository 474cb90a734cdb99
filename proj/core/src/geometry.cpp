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

#include "boxrot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "boxrot/error.hpp"

namespace boxrot {
namespace {

bool finite(double v) { return std::isfinite(v); }

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test, exact orientation signs.
bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int d1 = sign(cross(c, d, a));
  const int d2 = sign(cross(c, d, b));
  const int d3 = sign(cross(a, b, c));
  const int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

bool is_simple(std::span<const Point2> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // adjacent edges share a vertex by construction
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_touch(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

std::vector<Point2> normalize_vertices(std::vector<Point2> v) {
  for (const Point2& p : v) {
    if (!finite(p.x) || !finite(p.y)) throw InvalidArgument("polygon vertex is not finite");
  }
  // drop exact consecutive duplicates, including a closing repeat of the first vertex
  std::vector<Point2> out;
  out.reserve(v.size());
  for (const Point2& p : v) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  if (out.size() < 3) {
    throw InvalidArgument("polygon needs at least 3 distinct vertices, got " +
                          std::to_string(out.size()));
  }
  const double area = signed_area(out);
  if (area == 0.0 || !finite(area)) throw InvalidArgument("polygon has zero area");
  if (area < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

AABox::AABox(double xmin, double ymin, double xmax, double ymax)
    : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax) {
  if (!finite(xmin) || !finite(ymin) || !finite(xmax) || !finite(ymax)) {
    throw InvalidArgument("box coordinates must be finite");
  }
  if (!(xmin < xmax) || !(ymin < ymax)) {
    throw InvalidArgument("degenerate box: need xmin < xmax and ymin < ymax");
  }
}

AABox AABox::from_xywh(double x, double y, double w, double h) {
  if (!(w > 0.0) || !(h > 0.0)) throw InvalidArgument("box width and height must be positive");
  return AABox(x, y, x + w, y + h);
}

AABox AABox::from_center(Point2 c, double half_width, double half_height) {
  return AABox(c.x - half_width, c.y - half_height, c.x + half_width, c.y + half_height);
}

AABox AABox::translated(double dx, double dy) const {
  return AABox(xmin_ + dx, ymin_ + dy, xmax_ + dx, ymax_ + dy);
}

bool AABox::contains(const AABox& o, double eps) const {
  return o.xmin_ >= xmin_ - eps && o.ymin_ >= ymin_ - eps && o.xmax_ <= xmax_ + eps &&
         o.ymax_ <= ymax_ + eps;
}

bool AABox::approx_equal(const AABox& o, double eps) const {
  return std::abs(o.xmin_ - xmin_) <= eps && std::abs(o.ymin_ - ymin_) <= eps &&
         std::abs(o.xmax_ - xmax_) <= eps && std::abs(o.ymax_ - ymax_) <= eps;
}

double canonical_angle(double theta) {
  if (!finite(theta)) throw InvalidArgument("rotation angle must be finite");
  double t = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (t <= -kPi) t += 2.0 * kPi;
  // remainder of an exact multiple of 2*pi may come back as -0.0
  if (t == 0.0) t = 0.0;
  return t;
}

Rotation::Rotation(double theta, Point2 pivot) : theta_(canonical_angle(theta)), pivot_(pivot) {
  if (!finite(pivot.x) || !finite(pivot.y)) throw InvalidArgument("rotation pivot must be finite");
  if (theta_ == 0.0) {
    cos_ = 1.0;
    sin_ = 0.0;
  } else {
    cos_ = std::cos(theta_);
    sin_ = std::sin(theta_);
  }
}

Point2 Rotation::apply(Point2 p) const {
  if (is_identity()) return p;
  const double dx = p.x - pivot_.x;
  const double dy = p.y - pivot_.y;
  return {cos_ * dx - sin_ * dy + pivot_.x, sin_ * dx + cos_ * dy + pivot_.y};
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(normalize_vertices(std::move(vertices))) {
  if (!is_simple(vertices_)) throw InvalidArgument("polygon is self-intersecting");
}

Polygon::Polygon(std::vector<Point2> vertices, TrustedTag)
    : vertices_(normalize_vertices(std::move(vertices))) {}

Polygon Polygon::from_trusted(std::vector<Point2> vertices) {
  return Polygon(std::move(vertices), TrustedTag{});
}

double signed_area(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double polygon_area(const Polygon& poly) { return std::abs(signed_area(poly.vertices())); }

AABox bbox_of(std::span<const Point2> pts) {
  if (pts.empty()) throw InvalidArgument("bounding box of an empty point set");
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point2& p : pts.subspan(1)) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return AABox(xmin, ymin, xmax, ymax);
}

AABox bbox_of(const Polygon& poly) { return bbox_of(poly.vertices()); }

Point2 rotate_point(Point2 p, const Rotation& rot) { return rot.apply(p); }

Polygon rotate_polygon(const Polygon& poly, const Rotation& rot) {
  if (rot.is_identity()) return poly;
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const Point2& p : poly.vertices()) out.push_back(rot.apply(p));
  return Polygon::from_trusted(std::move(out));
}

AABox rotated_box_bounds(const AABox& box, const Rotation& rot) {
  if (rot.is_identity()) return box;
  const Point2 corners[4] = {{box.xmin(), box.ymin()},
                             {box.xmax(), box.ymin()},
                             {box.xmax(), box.ymax()},
                             {box.xmin(), box.ymax()}};
  Point2 rotated[4];
  for (int i = 0; i < 4; ++i) rotated[i] = rot.apply(corners[i]);
  return bbox_of(rotated);
}

double iou_aabb(const AABox& a, const AABox& b) {
  const double iw = std::min(a.xmax(), b.xmax()) - std::max(a.xmin(), b.xmin());
  const double ih = std::min(a.ymax(), b.ymax()) - std::max(a.ymin(), b.ymin());
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_convex(const Polygon& poly) {
  const auto v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) < -kGeomEps) return false;
  }
  return true;
}

std::optional<Polygon> clip_polygon_to_convex(const Polygon& poly, const Polygon& clip) {
  std::vector<Point2> current(poly.vertices().begin(), poly.vertices().end());
  const auto edges = clip.vertices();
  const std::size_t m = edges.size();
  std::vector<Point2> next;
  for (std::size_t e = 0; e < m && !current.empty(); ++e) {
    const Point2 a = edges[e];
    const Point2 b = edges[(e + 1) % m];
    next.clear();
    const std::size_t n = current.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = current[i];
      const Point2 q = current[(i + 1) % n];
      const double dp = cross(a, b, p);
      const double dq = cross(a, b, q);
      // interior is on the left of each clip edge
      if (dp >= 0.0) next.push_back(p);
      if ((dp >= 0.0) != (dq >= 0.0)) {
        const double t = dp / (dp - dq);
        next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    current.swap(next);
  }
  if (current.size() < 3) return std::nullopt;
  const double area = signed_area(current);
  const AABox scale_box = bbox_of(clip);
  if (!(std::abs(area) > 1e-15 * scale_box.area())) return std::nullopt;
  try {
    return Polygon::from_trusted(std::move(current));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

Polygon box_polygon(const AABox& box) {
  return Polygon::from_trusted({{box.xmin(), box.ymin()},
                                {box.xmax(), box.ymin()},
                                {box.xmax(), box.ymax()},
                                {box.xmin(), box.ymax()}});
}

Polygon inscribed_ellipse(const AABox& box, int m) {
  if (m < 8) throw InvalidArgument("inscribed ellipse needs at least 8 vertices");
  const Point2 c = box.center();
  const double a = 0.5 * box.width();
  const double b = 0.5 * box.height();
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    // quadrant points are placed exactly so the box is touched without rounding
    if (4 * k % m == 0) {
      switch (4 * k / m) {
        case 0: v.push_back({box.xmax(), c.y}); continue;
        case 1: v.push_back({c.x, box.ymax()}); continue;
        case 2: v.push_back({box.xmin(), c.y}); continue;
        default: v.push_back({c.x, box.ymin()}); continue;
      }
    }
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    v.push_back({c.x + a * std::cos(t), c.y + b * std::sin(t)});
  }
  return Polygon::from_trusted(std::move(v));
}

EllipseFit ellipse_fit(const Polygon& poly, const AABox& box) {
  const Point2 c = box.center();
  const double a = 0.5 * box.width();
  const double b = 0.5 * box.height();
  EllipseFit fit;
  for (const Point2& p : poly.vertices()) {
    const double r = std::hypot((p.x - c.x) / a, (p.y - c.y) / b);
    const double dev = std::abs(r - 1.0);
    fit.mean_deviation += dev;
    fit.max_deviation = std::max(fit.max_deviation, dev);
  }
  fit.mean_deviation /= static_cast<double>(poly.size());
  return fit;
}

}  // namespace boxrot
