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

#ifndef BOXROT_SHAPE_SAMPLER_HPP
#define BOXROT_SHAPE_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "boxrot/geometry.hpp"

namespace boxrot {

// Random shape family used to stand in for the unknown distribution of
// object shapes behind a box: the convex hull of one uniform point on the
// open interior of each box side plus `interior_points` uniform points
// inside the box.
struct ShapeDistConfig {
  int interior_points = 0;
  std::uint64_t seed = 0;
  double epsilon_touch = 1e-9;

  void validate() const;
};

// Draw `draw_index` of the shape family for `box`. The result is convex and
// its bounding box is exactly `box`.
Polygon sample_valid_shape(const AABox& box, const ShapeDistConfig& cfg, std::uint64_t draw_index);

struct SampleSet {
  AABox source;
  std::vector<Polygon> shapes;
};

// Draws [first_index, first_index + count).
SampleSet sample_shapes(const AABox& box, const ShapeDistConfig& cfg, std::size_t count,
                        std::uint64_t first_index = 0);

}  // namespace boxrot

#endif  // BOXROT_SHAPE_SAMPLER_HPP
