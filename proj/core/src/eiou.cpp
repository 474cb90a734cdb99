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

#include "boxrot/eiou.hpp"

#include <cmath>
#include <string>

#include "boxrot/error.hpp"
#include "boxrot/parallel.hpp"

namespace boxrot {
namespace {

constexpr double kShapeMatchTol = 1e-6;

EiouEstimate finish(std::vector<double> per_theta) {
  EiouEstimate est;
  double sum = 0.0;
  for (double v : per_theta) sum += v;
  est.mean = sum / static_cast<double>(per_theta.size());
  est.per_theta = std::move(per_theta);
  return est;
}

// Keep-mode frame pivoting on the box center: labels come back pivot-local.
FrameSpec local_frame(const AABox& box) {
  FrameSpec frame;
  // canvas size is irrelevant in keep mode with an explicit pivot
  frame.width = 1.0;
  frame.height = 1.0;
  frame.mode = CanvasMode::kKeep;
  frame.pivot = box.center();
  return frame;
}

}  // namespace

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int deg = 1; deg <= 45; ++deg) grid.push_back(deg_to_rad(deg));
  return grid;
}

void EiouConfig::validate() const {
  if (samples_per_angle < 1) throw InvalidArgument("K (samples per angle) must be >= 1");
  if (thetas.empty()) throw InvalidArgument("theta grid must not be empty");
  for (double t : thetas) {
    if (!(t > 0.0 && t < 0.5 * kPi)) {
      throw InvalidArgument("theta grid values must lie strictly between 0 and 90 degrees");
    }
  }
  if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
  shapes.validate();
}

CandidateSet::CandidateSet(const AABox& box, const EiouConfig& cfg)
    : box_(box), thetas_((cfg.validate(), cfg.thetas)),
      samples_(static_cast<std::size_t>(cfg.samples_per_angle)) {
  const SampleSet set = sample_shapes(box, cfg.shapes, samples_);
  const Point2 c = box.center();
  boxes_.assign(thetas_.size() * samples_, box);
  parallel_for(thetas_.size(), cfg.jobs, [&](std::size_t t) {
    const Rotation rot(thetas_[t], c);
    for (std::size_t k = 0; k < samples_; ++k) {
      boxes_[t * samples_ + k] = bbox_of(rotate_polygon(set.shapes[k], rot));
    }
  });
}

CandidateSet::CandidateSet(const AABox& box, std::vector<double> thetas, std::size_t samples,
                           std::vector<AABox> boxes)
    : box_(box), thetas_(std::move(thetas)), samples_(samples), boxes_(std::move(boxes)) {}

CandidateSet CandidateSet::mirrored() const {
  std::vector<double> thetas = thetas_;
  std::vector<AABox> boxes = boxes_;
  const double twice_cx = box_.xmin() + box_.xmax();
  for (std::size_t t = 0; t < thetas_.size(); ++t) {
    thetas.push_back(-thetas_[t]);
    for (const AABox& b : at(t)) {
      boxes.emplace_back(twice_cx - b.xmax(), b.ymin(), twice_cx - b.xmin(), b.ymax());
    }
  }
  return CandidateSet(box_, std::move(thetas), samples_, std::move(boxes));
}

double mean_iou_at(const CandidateSet& candidates, std::size_t t, const AABox& label) {
  double sum = 0.0;
  for (const AABox& b : candidates.at(t)) sum += iou_aabb(label, b);
  return sum / static_cast<double>(candidates.samples());
}

EiouEstimate estimate_eiou_for_shape(const Polygon& shape, const CandidateSet& candidates, int jobs) {
  if (!bbox_of(shape).approx_equal(candidates.box(), kShapeMatchTol)) {
    throw InvalidArgument("shape is not a valid shape for the box (bounding boxes differ)");
  }
  const auto thetas = candidates.thetas();
  const Point2 c = candidates.box().center();
  std::vector<double> per_theta(thetas.size());
  parallel_for(thetas.size(), jobs, [&](std::size_t t) {
    const AABox label = bbox_of(rotate_polygon(shape, Rotation(thetas[t], c)));
    per_theta[t] = 100.0 * mean_iou_at(candidates, t, label);
  });
  return finish(std::move(per_theta));
}

EiouEstimate estimate_eiou_for_shape(const Polygon& shape, const AABox& box, const EiouConfig& cfg) {
  return estimate_eiou_for_shape(shape, CandidateSet(box, cfg), cfg.jobs);
}

EiouEstimate estimate_eiou_for_method(const MethodId& method, const CandidateSet& candidates,
                                      const ShapeDistConfig& label_shapes, int jobs) {
  if (method.kind() == MethodKind::kPerfect) {
    throw InvalidArgument("the perfect method needs per-sample shapes; its EIoU is 100 by definition");
  }
  const auto thetas = candidates.thetas();
  const AABox& box = candidates.box();
  const FrameSpec frame = local_frame(box);
  std::vector<double> per_theta(thetas.size());
  parallel_for(thetas.size(), jobs, [&](std::size_t t) {
    LabelInputs inputs;
    inputs.rng = {label_shapes, candidates.samples() + t};
    const AABox label = rotate_label(method, box, thetas[t], frame, inputs);
    per_theta[t] = 100.0 * mean_iou_at(candidates, t, label);
  });
  return finish(std::move(per_theta));
}

EiouEstimate estimate_eiou_for_method(const MethodId& method, const AABox& box, const EiouConfig& cfg) {
  return estimate_eiou_for_method(method, CandidateSet(box, cfg), cfg.shapes, cfg.jobs);
}

}  // namespace boxrot
