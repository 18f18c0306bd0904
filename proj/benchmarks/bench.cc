// Copyright 2026 The sirstbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "sirstbench/assign.h"
#include "sirstbench/baselines/ipi.h"
#include "sirstbench/baselines/local_contrast.h"
#include "sirstbench/codec.h"
#include "sirstbench/eval.h"
#include "sirstbench/io/synth.h"
#include "sirstbench/noco.h"

namespace sirst {
namespace {

io::Scene easy_scene(int size) {
  io::SceneSpec spec = io::easy_spec(1, 0);
  spec.height = spec.width = size;
  return io::synth_scene(spec);
}

void BM_NocoMap(benchmark::State& state) {
  const io::Scene s = easy_scene(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(image_noco_map(s.image, s.targets, NoCoConfig{}));
  }
}
BENCHMARK(BM_NocoMap)->Arg(128)->Arg(256);

void BM_Nms(benchmark::State& state) {
  io::Rng rng(2);
  std::vector<Detection> dets;
  for (int i = 0; i < state.range(0); ++i) {
    const double x = rng.uniform(0, 200), y = rng.uniform(0, 200);
    dets.push_back({{x, y, x + rng.uniform(2, 12), y + rng.uniform(2, 12)}, rng.uniform(), "a"});
  }
  for (auto _ : state) benchmark::DoNotOptimize(nms(dets, 0.5));
}
BENCHMARK(BM_Nms)->Arg(100)->Arg(1000);

void BM_AspbAssign(benchmark::State& state) {
  const io::Scene s = easy_scene(256);
  const std::vector<LevelSpec> levels{{4, 1.5}, {8, 1.5}, {16, 1.5}};
  for (auto _ : state) benchmark::DoNotOptimize(aspb_assign(s.targets, levels, 256, 256));
}
BENCHMARK(BM_AspbAssign);

void BM_Lcm(benchmark::State& state) {
  const io::Scene s = easy_scene(256);
  for (auto _ : state) benchmark::DoNotOptimize(lcm(s.image));
}
BENCHMARK(BM_Lcm);

void BM_Mpcm(benchmark::State& state) {
  const io::Scene s = easy_scene(256);
  for (auto _ : state) benchmark::DoNotOptimize(mpcm(s.image));
}
BENCHMARK(BM_Mpcm);

void BM_Ipi(benchmark::State& state) {
  const io::Scene s = easy_scene(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ipi(s.image, IpiConfig{}));
}
BENCHMARK(BM_Ipi)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Mnocoap(benchmark::State& state) {
  std::vector<EvalImage> data;
  for (const io::Scene& s : io::easy_suite(1, 20)) {
    EvalImage e{"img" + std::to_string(data.size()), s.image, s.targets, {}};
    for (const GtTarget& t : s.targets) e.detections.push_back({t.box, 0.9, e.image_id});
    data.push_back(std::move(e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(mnocoap(data, EvalConfig{}));
}
BENCHMARK(BM_Mnocoap)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sirst

BENCHMARK_MAIN();
