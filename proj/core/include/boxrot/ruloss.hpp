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

#ifndef BOXROT_RULOSS_HPP
#define BOXROT_RULOSS_HPP

#include <span>
#include <vector>

#include "boxrot/geometry.hpp"

namespace boxrot {

// Rotation-uncertainty gate parameters. `delta` is the angle (radians) at
// which the certainty curve reaches the 0.5 floor.
struct RuParams {
  static constexpr double kFloor = 0.5;
  double delta = deg_to_rad(10.0);

  void validate() const;
};

// Certainty threshold C(theta) = max(0.5, 1 + (1 - cos 4theta) / (2 cos 4delta - 2)).
// Equals 1 at multiples of 90 degrees and is 90-degree periodic.
double certainty(double theta, const RuParams& params = {});

// True when the box-regression loss should be applied: the prediction's IoU
// with its label is still below the certainty threshold for this rotation.
bool regression_loss_active(double iou_pred_label, double theta, const RuParams& params = {});

// Elementwise regression_loss_active. Lengths must match.
std::vector<bool> ru_mask(std::span<const double> ious, std::span<const double> thetas,
                          const RuParams& params = {});

}  // namespace boxrot

#endif  // BOXROT_RULOSS_HPP
