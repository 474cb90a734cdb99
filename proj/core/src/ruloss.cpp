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

#include "boxrot/ruloss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boxrot/error.hpp"

namespace boxrot {

void RuParams::validate() const {
  if (!(delta > 0.0 && delta <= 0.25 * kPi + 1e-15)) {
    throw InvalidArgument("RU delta must be in (0, 45] degrees");
  }
}

double certainty(double theta, const RuParams& params) {
  params.validate();
  if (!std::isfinite(theta)) throw InvalidArgument("rotation angle must be finite");
  // fold into [-45, 45] degrees; the curve has period 90 degrees
  const double folded = std::remainder(theta, 0.5 * kPi);
  const double alpha = 2.0 * std::cos(4.0 * params.delta);
  const double raw = 1.0 + (1.0 - std::cos(4.0 * folded)) / (alpha - 2.0);
  return std::max(RuParams::kFloor, raw);
}

bool regression_loss_active(double iou_pred_label, double theta, const RuParams& params) {
  if (!(iou_pred_label >= 0.0 && iou_pred_label <= 1.0)) {
    throw InvalidArgument("IoU must be in [0, 1]");
  }
  return iou_pred_label < certainty(theta, params);
}

std::vector<bool> ru_mask(std::span<const double> ious, std::span<const double> thetas,
                          const RuParams& params) {
  if (ious.size() != thetas.size()) {
    throw InvalidArgument("ru_mask: " + std::to_string(ious.size()) + " IoUs but " +
                          std::to_string(thetas.size()) + " angles");
  }
  std::vector<bool> mask(ious.size());
  for (std::size_t i = 0; i < ious.size(); ++i) {
    mask[i] = regression_loss_active(ious[i], thetas[i], params);
  }
  return mask;
}

}  // namespace boxrot
