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

#ifndef BOXROT_ROTATORS_HPP
#define BOXROT_ROTATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boxrot/error.hpp"
#include "boxrot/geometry.hpp"
#include "boxrot/shape_sampler.hpp"

namespace boxrot {

enum class CanvasMode { kExpand, kKeep };

// Image canvas that a rotation acts on.
//
// In expand mode the output canvas grows to hold the whole rotated image and
// the rotation is always about the image center. In keep mode the canvas size
// is unchanged and the rotation is about `pivot` (image center when unset).
struct FrameSpec {
  double width = 0.0;
  double height = 0.0;
  CanvasMode mode = CanvasMode::kExpand;
  std::optional<Point2> pivot;

  void validate() const;
  Point2 center() const { return {0.5 * width, 0.5 * height}; }
};

// Rigid point map p -> R(theta) (p - c) + c' together with the output canvas.
struct FrameMap {
  Rotation rotation;  // about the input pivot c
  Point2 output_pivot;
  FrameSpec output;

  Point2 apply(Point2 p) const;
  // Translation that carries the input pivot to the output pivot.
  double dx() const { return output_pivot.x - rotation.pivot().x; }
  double dy() const { return output_pivot.y - rotation.pivot().y; }
};

FrameMap frame_transform(const FrameSpec& frame, double theta);

enum class MethodKind { kLargest, kEllipse, kOctagon, kRandom, kRotIou, kPerfect };

// A label-rotation method. Only the octagon carries a parameter.
class MethodId {
 public:
  static MethodId largest() { return MethodId(MethodKind::kLargest); }
  static MethodId ellipse() { return MethodId(MethodKind::kEllipse); }
  static MethodId octagon(double s);
  static MethodId random() { return MethodId(MethodKind::kRandom); }
  static MethodId rotiou() { return MethodId(MethodKind::kRotIou); }
  static MethodId perfect() { return MethodId(MethodKind::kPerfect); }

  // Accepts "largest", "ellipse", "octagon" (uses `default_s`),
  // "octagon:<s>", "random", "rotiou", "perfect".
  static MethodId parse(std::string_view text, double default_s = 0.5);

  MethodKind kind() const { return kind_; }
  double octagon_scale() const { return s_; }
  // Round-trips through parse().
  std::string name() const;

  friend bool operator==(const MethodId&, const MethodId&) = default;

 private:
  explicit MethodId(MethodKind kind, double s = 0.0) : kind_(kind), s_(s) {}

  MethodKind kind_;
  double s_;
};

// Every MethodKind, in declaration order, with the octagon at s = 0.5.
std::vector<MethodId> all_methods();

// Seed and draw index for the random method.
struct RngContext {
  ShapeDistConfig shapes;
  std::uint64_t draw_index = 0;
};

struct LabelInputs {
  const Polygon* shape = nullptr;  // required by, and only accepted for, kPerfect
  RngContext rng;
};

// Rotated label for box `b0` when the image is rotated by `theta` (radians)
// under `frame`. The method's shape is rotated about the box center, boxed,
// and the result translated by the frame's point map. Largest and ellipse use
// closed forms; the others go through the polygon pipeline.
AABox rotate_label(const MethodId& method, const AABox& b0, double theta, const FrameSpec& frame,
                   const LabelInputs& inputs = {});
// Same, with a precomputed point map (the angle is the map's).
AABox rotate_label(const MethodId& method, const AABox& b0, const FrameMap& map,
                   const LabelInputs& inputs = {});

// Closed-form half extents (pivot at the box center).
AABox largest_label_local(const AABox& b0, double theta);
AABox ellipse_label_local(const AABox& b0, double theta);

// Octagon obtained by cutting each corner of `b` at distance s*W along the
// horizontal sides and s*H along the vertical sides. s = 0 is the box itself,
// s = 0.5 the diamond through the side midpoints.
Polygon octagon_shape(const AABox& b, double s);

AABox random_valid_label(const AABox& b0, double theta, const FrameSpec& frame,
                         const ShapeDistConfig& cfg, std::uint64_t draw_index);

// Raised when the RotIoU coordinate search hits its iteration cap.
class RotIouNotConverged : public Error {
 public:
  RotIouNotConverged(const std::string& what, AABox best, double best_iou)
      : Error(what), best_(best), best_iou_(best_iou) {}
  const AABox& best() const { return best_; }
  double best_iou() const { return best_iou_; }

 private:
  AABox best_;
  double best_iou_;
};

struct RotIouOptions {
  int max_iterations = 200;
  double move_tolerance = 1e-6;  // relative to the box diagonal
};

// Axis-aligned box maximizing IoU with the oriented rectangle obtained by
// rotating `b0` about its center. Coordinate search over the four sides with
// golden-section line searches, started from the ellipse label.
AABox rotiou_label_local(const AABox& b0, double theta, const RotIouOptions& opts = {});
AABox rotiou_label(const AABox& b0, double theta, const FrameSpec& frame,
                   const RotIouOptions& opts = {});

// IoU between an axis-aligned box and a convex polygon.
double iou_box_polygon(const AABox& box, const Polygon& convex);

// Clip a label to the canvas. nullopt when the visible fraction of its area
// is below `min_visibility` or nothing is visible.
std::optional<AABox> clip_to_canvas(const AABox& box, const FrameSpec& canvas,
                                    double min_visibility = 0.25);

}  // namespace boxrot

#endif  // BOXROT_ROTATORS_HPP
