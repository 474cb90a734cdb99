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

#include <benchmark/benchmark.h>

#include "boxrot/rotators.hpp"

using namespace boxrot;

namespace {

const AABox kBox(40, 30, 160, 90);
const FrameSpec kFrame{256, 192, CanvasMode::kExpand, {}};

void BM_RotateLabel(benchmark::State& state) {
  const MethodId method = all_methods()[static_cast<std::size_t>(state.range(0))];
  const Polygon shape = inscribed_ellipse(kBox, 64);
  LabelInputs in;
  if (method.kind() == MethodKind::kPerfect) in.shape = &shape;
  in.rng.shapes.interior_points = 8;
  double theta = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotate_label(method, kBox, theta, kFrame, in));
    theta += 1e-3;
    if (theta > 1.5) theta = 0.01;
  }
  state.SetLabel(method.name());
}
BENCHMARK(BM_RotateLabel)->DenseRange(0, 5);

void BM_RotIouLocal(benchmark::State& state) {
  const double theta = deg_to_rad(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rotiou_label_local(kBox, theta));
}
BENCHMARK(BM_RotIouLocal)->Arg(5)->Arg(20)->Arg(45);

void BM_ClipPolygon(benchmark::State& state) {
  const Polygon subject = inscribed_ellipse(kBox, static_cast<int>(state.range(0)));
  const Polygon clip = rotate_polygon(box_polygon(kBox), Rotation(0.4, kBox.center()));
  for (auto _ : state) benchmark::DoNotOptimize(clip_polygon_to_convex(subject, clip));
}
BENCHMARK(BM_ClipPolygon)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace
