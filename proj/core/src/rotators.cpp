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

#include "boxrot/rotators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <fmt/format.h>

namespace boxrot {
namespace {

constexpr double kShapeMatchTol = 1e-6;
constexpr double kGolden = 0.6180339887498949;

AABox bbox_rotated_about_center(const Polygon& shape, const AABox& b0, double theta) {
  return bbox_of(rotate_polygon(shape, Rotation(theta, b0.center())));
}

}  // namespace

void FrameSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw InvalidArgument("frame width and height must be positive and finite");
  }
  if (pivot && (!std::isfinite(pivot->x) || !std::isfinite(pivot->y))) {
    throw InvalidArgument("frame pivot must be finite");
  }
}

Point2 FrameMap::apply(Point2 p) const {
  const Point2 r = rotation.apply(p);
  return {r.x + dx(), r.y + dy()};
}

FrameMap frame_transform(const FrameSpec& frame, double theta) {
  frame.validate();
  FrameMap map;
  if (frame.mode == CanvasMode::kExpand) {
    const Point2 c = frame.center();
    map.rotation = Rotation(theta, c);
    const double ac = std::abs(map.rotation.cos_theta());
    const double as = std::abs(map.rotation.sin_theta());
    map.output.width = frame.width * ac + frame.height * as;
    map.output.height = frame.width * as + frame.height * ac;
    map.output.mode = CanvasMode::kExpand;
    map.output_pivot = map.output.center();
  } else {
    const Point2 c = frame.pivot.value_or(frame.center());
    map.rotation = Rotation(theta, c);
    map.output = frame;
    map.output_pivot = c;
  }
  return map;
}

MethodId MethodId::octagon(double s) {
  if (!(s >= 0.0 && s <= 0.5)) {
    throw InvalidArgument(fmt::format("octagon scale must be in [0, 0.5], got {}", s));
  }
  return MethodId(MethodKind::kOctagon, s);
}

MethodId MethodId::parse(std::string_view text, double default_s) {
  if (text == "largest") return largest();
  if (text == "ellipse") return ellipse();
  if (text == "octagon") return octagon(default_s);
  if (text == "random") return random();
  if (text == "rotiou") return rotiou();
  if (text == "perfect") return perfect();
  if (text.starts_with("octagon:")) {
    const std::string arg(text.substr(8));
    std::size_t used = 0;
    double s = 0.0;
    try {
      s = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size()) {
      throw InvalidArgument("bad octagon scale in method '" + std::string(text) + "'");
    }
    return octagon(s);
  }
  throw InvalidArgument("unknown method '" + std::string(text) +
                        "' (expected largest, ellipse, octagon[:s], random, rotiou, perfect)");
}

std::string MethodId::name() const {
  switch (kind_) {
    case MethodKind::kLargest: return "largest";
    case MethodKind::kEllipse: return "ellipse";
    case MethodKind::kOctagon: return fmt::format("octagon:{}", s_);
    case MethodKind::kRandom: return "random";
    case MethodKind::kRotIou: return "rotiou";
    case MethodKind::kPerfect: return "perfect";
  }
  return "unknown";
}

std::vector<MethodId> all_methods() {
  return {MethodId::largest(), MethodId::ellipse(), MethodId::octagon(0.5),
          MethodId::random(),  MethodId::rotiou(),  MethodId::perfect()};
}

AABox largest_label_local(const AABox& b0, double theta) {
  const Rotation rot(theta, b0.center());
  if (rot.is_identity()) return b0;
  const double a = 0.5 * b0.width();
  const double b = 0.5 * b0.height();
  const double c = std::abs(rot.cos_theta());
  const double s = std::abs(rot.sin_theta());
  return AABox::from_center(b0.center(), a * c + b * s, a * s + b * c);
}

AABox ellipse_label_local(const AABox& b0, double theta) {
  const Rotation rot(theta, b0.center());
  if (rot.is_identity()) return b0;
  const double a = 0.5 * b0.width();
  const double b = 0.5 * b0.height();
  const double c = rot.cos_theta();
  const double s = rot.sin_theta();
  return AABox::from_center(b0.center(), std::sqrt(a * a * c * c + b * b * s * s),
                            std::sqrt(a * a * s * s + b * b * c * c));
}

Polygon octagon_shape(const AABox& b, double s) {
  if (!(s >= 0.0 && s <= 0.5)) {
    throw InvalidArgument(fmt::format("octagon scale must be in [0, 0.5], got {}", s));
  }
  const Point2 c = b.center();
  double xl = b.xmin() + s * b.width();
  double xr = b.xmax() - s * b.width();
  double yt = b.ymin() + s * b.height();
  double yb = b.ymax() - s * b.height();
  if (xl >= xr) xl = xr = c.x;
  if (yt >= yb) yt = yb = c.y;
  // consecutive duplicates (s = 0 corners, s = 0.5 midpoints) are removed by Polygon
  return Polygon::from_trusted({{xl, b.ymin()},
                                {xr, b.ymin()},
                                {b.xmax(), yt},
                                {b.xmax(), yb},
                                {xr, b.ymax()},
                                {xl, b.ymax()},
                                {b.xmin(), yb},
                                {b.xmin(), yt}});
}

double iou_box_polygon(const AABox& box, const Polygon& convex) {
  const auto inter_poly = clip_polygon_to_convex(box_polygon(box), convex);
  if (!inter_poly) return 0.0;
  const double inter = polygon_area(*inter_poly);
  const double uni = box.area() + polygon_area(convex) - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

AABox rotiou_label_local(const AABox& b0, double theta, const RotIouOptions& opts) {
  const Rotation rot(theta, b0.center());
  if (rot.is_identity()) return b0;
  // a right-angle turn leaves the rectangle axis aligned
  if (std::abs(rot.sin_theta()) < 1e-15 || std::abs(rot.cos_theta()) < 1e-15) {
    return largest_label_local(b0, theta);
  }

  // The target is symmetric about the center, so the best box is centered
  // (averaging a box with its reflection never lowers IoU). Fold the angle
  // into one quarter turn; odd quarters swap the half extents.
  const double quarter = 0.5 * kPi;
  double k = std::floor(rot.theta() / quarter);
  double t = rot.theta() - k * quarter;
  if (t >= quarter) {
    t -= quarter;
    k += 1.0;
  }
  const bool swap = static_cast<long>(k) % 2 != 0;
  const Point2 c = b0.center();
  const Polygon target = rotate_polygon(box_polygon(b0), Rotation(t, c));
  const AABox outer = largest_label_local(b0, t);
  const double ax = 0.5 * outer.width();
  const double ay = 0.5 * outer.height();

  const double diag = std::hypot(b0.width(), b0.height());
  const double min_half = 1e-6 * diag;
  const double move_tol = opts.move_tolerance * diag;
  const double line_tol = 1e-3 * move_tol;

  auto score = [&](double hx, double hy) {
    return iou_box_polygon(AABox(c.x - hx, c.y - hy, c.x + hx, c.y + hy), target);
  };
  auto finish = [&](double hx, double hy) {
    if (swap) std::swap(hx, hy);
    return AABox(c.x - hx, c.y - hy, c.x + hx, c.y + hy);
  };

  // coarse grid start
  constexpr int kGrid = 32;
  double h[2] = {ax, ay};
  double best = -1.0;
  for (int i = 1; i <= kGrid; ++i) {
    for (int j = 1; j <= kGrid; ++j) {
      const double hx = ax * i / kGrid;
      const double hy = ay * j / kGrid;
      const double v = score(hx, hy);
      if (v > best) {
        best = v;
        h[0] = hx;
        h[1] = hy;
      }
    }
  }

  const double upper[2] = {ax, ay};
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double max_move = 0.0;
    for (int i = 0; i < 2; ++i) {
      auto f = [&](double v) { return i == 0 ? score(v, h[1]) : score(h[0], v); };
      double a = min_half;
      double b = upper[i];
      double x1 = b - kGolden * (b - a);
      double x2 = a + kGolden * (b - a);
      double f1 = f(x1);
      double f2 = f(x2);
      while (b - a > line_tol) {
        if (f1 >= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - kGolden * (b - a);
          f1 = f(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + kGolden * (b - a);
          f2 = f(x2);
        }
      }
      const double cand = 0.5 * (a + b);
      const double fcand = f(cand);
      if (fcand > best) {
        max_move = std::max(max_move, std::abs(cand - h[i]));
        h[i] = cand;
        best = fcand;
      }
    }
    if (max_move <= move_tol) return finish(h[0], h[1]);
  }
  throw RotIouNotConverged(
      fmt::format("rotiou search did not converge in {} iterations", opts.max_iterations),
      finish(h[0], h[1]), best);
}

AABox rotiou_label(const AABox& b0, double theta, const FrameSpec& frame, const RotIouOptions& opts) {
  const FrameMap map = frame_transform(frame, theta);
  const Point2 c = b0.center();
  const Point2 mc = map.apply(c);
  const AABox local = rotiou_label_local(b0, map.rotation.theta(), opts);
  if (mc.x == c.x && mc.y == c.y) return local;
  return local.translated(mc.x - c.x, mc.y - c.y);
}

AABox rotate_label(const MethodId& method, const AABox& b0, double theta, const FrameSpec& frame,
                   const LabelInputs& inputs) {
  return rotate_label(method, b0, frame_transform(frame, theta), inputs);
}

AABox rotate_label(const MethodId& method, const AABox& b0, const FrameMap& map,
                   const LabelInputs& inputs) {
  if (method.kind() == MethodKind::kPerfect) {
    if (inputs.shape == nullptr) throw InvalidArgument("perfect labels need the object shape");
    if (!bbox_of(*inputs.shape).approx_equal(b0, kShapeMatchTol)) {
      throw InvalidArgument("shape bounding box does not match the label box");
    }
  } else if (inputs.shape != nullptr) {
    throw InvalidArgument("method '" + method.name() + "' does not take a shape");
  }

  const double t = map.rotation.theta();
  AABox local = b0;
  if (t != 0.0) {
    switch (method.kind()) {
      case MethodKind::kLargest: local = largest_label_local(b0, t); break;
      case MethodKind::kEllipse: local = ellipse_label_local(b0, t); break;
      case MethodKind::kOctagon:
        local = bbox_rotated_about_center(octagon_shape(b0, method.octagon_scale()), b0, t);
        break;
      case MethodKind::kRandom:
        local = bbox_rotated_about_center(
            sample_valid_shape(b0, inputs.rng.shapes, inputs.rng.draw_index), b0, t);
        break;
      case MethodKind::kRotIou: local = rotiou_label_local(b0, t); break;
      case MethodKind::kPerfect: local = bbox_rotated_about_center(*inputs.shape, b0, t); break;
    }
  }
  const Point2 c = b0.center();
  const Point2 mc = map.apply(c);
  const double dx = mc.x - c.x;
  const double dy = mc.y - c.y;
  if (dx == 0.0 && dy == 0.0) return local;
  return local.translated(dx, dy);
}

AABox random_valid_label(const AABox& b0, double theta, const FrameSpec& frame,
                         const ShapeDistConfig& cfg, std::uint64_t draw_index) {
  return rotate_label(MethodId::random(), b0, theta, frame, {nullptr, {cfg, draw_index}});
}

std::optional<AABox> clip_to_canvas(const AABox& box, const FrameSpec& canvas, double min_visibility) {
  const double xmin = std::max(box.xmin(), 0.0);
  const double ymin = std::max(box.ymin(), 0.0);
  const double xmax = std::min(box.xmax(), canvas.width);
  const double ymax = std::min(box.ymax(), canvas.height);
  if (!(xmin < xmax) || !(ymin < ymax)) return std::nullopt;
  const AABox clipped(xmin, ymin, xmax, ymax);
  if (clipped.area() < min_visibility * box.area()) return std::nullopt;
  return clipped;
}

}  // namespace boxrot
