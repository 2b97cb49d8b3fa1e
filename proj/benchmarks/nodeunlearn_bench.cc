// Copyright 2026 The nodeunlearn Authors.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nodeunlearn/backbone.h"
#include "nodeunlearn/graph.h"
#include "nodeunlearn/kde.h"
#include "nodeunlearn/linalg.h"
#include "nodeunlearn/mlp.h"
#include "nodeunlearn/random.h"
#include "nodeunlearn/synthetic.h"
#include "nodeunlearn/unlearning.h"

namespace nodeunlearn {
namespace {

Matrix Gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  Matrix m(rows, cols);
  for (double& v : m.data()) v = z(rng);
  return m;
}

const Dataset& Sbm() {
  static const Dataset data = GenerateSbm(SbmOptions{});
  return data;
}

void BM_PseudoInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = Gaussian(n, 4 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(PseudoInverse(a));
}
BENCHMARK(BM_PseudoInverse)->Arg(8)->Arg(16)->Arg(64);

void BM_MlpForwardBackward(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  Rng rng = MakeRng(2, 0);
  const std::size_t dims[] = {32, 64, 5};
  const Mlp mlp = Mlp::Create(dims, Activation::kRelu, rng);
  const Matrix x = Gaussian(batch, 32, 3);
  const Matrix upstream = Gaussian(batch, 5, 4);
  for (auto _ : state) {
    MlpTape tape;
    mlp.Forward(x, &tape);
    benchmark::DoNotOptimize(mlp.Backward(tape, upstream));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch));
}
BENCHMARK(BM_MlpForwardBackward)->Arg(64)->Arg(1024);

void BM_GcnTrainingEpoch(benchmark::State& state) {
  const Dataset& data = Sbm();
  BackboneHyper hyper;
  hyper.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TrainModel(data.graph, data.split, BackboneKind::kGcn, hyper));
  }
}
BENCHMARK(BM_GcnTrainingEpoch)->Unit(benchmark::kMillisecond);

void BM_RectifierEpoch(benchmark::State& state) {
  const Dataset& data = Sbm();
  const TrainedModel model =
      TrainModel(data.graph, data.split, BackboneKind::kGcn, BackboneHyper{});
  const UnlearnRequest request = SampleUnlearnSet(data.split, 0.1, 0);
  RectifierConfig config;
  config.epochs = 1;
  const UnlearningProblem problem = PrepareNodeUnlearning(model, data.graph, request, config);
  const DegenerateOperator op = ExtractDegenerateOperator(model);
  for (auto _ : state) benchmark::DoNotOptimize(TrainRectifier(problem, op, config));
}
BENCHMARK(BM_RectifierEpoch)->Unit(benchmark::kMillisecond);

void BM_KdePdf(benchmark::State& state) {
  const Matrix h = Gaussian(500, 5, 5);
  const std::vector<PolarPoint> points = EmbedToPolar(h, MeanDirection(h));
  const KdeAxes axes = DefaultAxes(points, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(KdePdf(points, 1.0, axes));
}
BENCHMARK(BM_KdePdf)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nodeunlearn

BENCHMARK_MAIN();
