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

#include "boxrot/shape_sampler.hpp"

#include <string>

#include "boxrot/error.hpp"
#include "boxrot/random.hpp"

namespace boxrot {
namespace {

constexpr int kMaxRedraws = 16;

}  // namespace

void ShapeDistConfig::validate() const {
  if (interior_points < 0) throw InvalidArgument("interior_points must be >= 0");
  if (!(epsilon_touch >= 0.0)) throw InvalidArgument("epsilon_touch must be >= 0");
}

Polygon sample_valid_shape(const AABox& box, const ShapeDistConfig& cfg, std::uint64_t draw_index) {
  cfg.validate();
  DrawStream rng(cfg.seed, Stream::kShapes, draw_index);
  const double w = box.width();
  const double h = box.height();
  std::vector<Point2> pts;
  pts.reserve(4 + static_cast<std::size_t>(cfg.interior_points));
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    pts.clear();
    // side points use the exact box coordinates so the hull's extent is the box
    pts.push_back({box.xmin() + w * rng.uniform_open(), box.ymin()});
    pts.push_back({box.xmax(), box.ymin() + h * rng.uniform_open()});
    pts.push_back({box.xmin() + w * rng.uniform_open(), box.ymax()});
    pts.push_back({box.xmin(), box.ymin() + h * rng.uniform_open()});
    for (int i = 0; i < cfg.interior_points; ++i) {
      pts.push_back({box.xmin() + w * rng.uniform_open(), box.ymin() + h * rng.uniform_open()});
    }
    std::vector<Point2> hull = convex_hull(pts);
    if (hull.size() < 3 || !(signed_area(hull) > 0.0)) continue;
    Polygon shape = Polygon::from_trusted(std::move(hull));
    const AABox got = bbox_of(shape);
    if (got.approx_equal(box, cfg.epsilon_touch)) return shape;
  }
  throw Error("could not draw a valid shape after " + std::to_string(kMaxRedraws) +
              " attempts (draw index " + std::to_string(draw_index) + ")");
}

SampleSet sample_shapes(const AABox& box, const ShapeDistConfig& cfg, std::size_t count,
                        std::uint64_t first_index) {
  SampleSet set{box, {}};
  set.shapes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    set.shapes.push_back(sample_valid_shape(box, cfg, first_index + i));
  }
  return set;
}

}  // namespace boxrot
