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

#include "boxrot/eiou.hpp"

using namespace boxrot;

namespace {

const AABox kBox(0, 0, 100, 100);

void BM_CandidateSet(benchmark::State& state) {
  EiouConfig cfg;
  cfg.samples_per_angle = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CandidateSet(kBox, cfg));
}
BENCHMARK(BM_CandidateSet)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EstimateEiouForShape(benchmark::State& state) {
  EiouConfig cfg;
  cfg.samples_per_angle = static_cast<int>(state.range(0));
  const CandidateSet cand(kBox, cfg);
  const Polygon ellipse = inscribed_ellipse(kBox, 256);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_eiou_for_shape(ellipse, cand));
}
BENCHMARK(BM_EstimateEiouForShape)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EstimateEiouForMethod(benchmark::State& state) {
  EiouConfig cfg;
  const CandidateSet cand(kBox, cfg);
  const MethodId method = state.range(0) == 0 ? MethodId::largest() : MethodId::rotiou();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_eiou_for_method(method, cand, cfg.shapes));
  state.SetLabel(method.name());
}
BENCHMARK(BM_EstimateEiouForMethod)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OptimizerShortRun(benchmark::State& state) {
  EiouConfig ecfg;
  ecfg.samples_per_angle = 200;
  OptimizerConfig ocfg;
  ocfg.max_iterations = 50;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_canonical_shape(kBox, ocfg, ecfg));
}
BENCHMARK(BM_OptimizerShortRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
