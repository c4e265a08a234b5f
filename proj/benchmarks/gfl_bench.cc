// Copyright 2026 The GFL Authors
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

#include "gfl/formula.h"
#include "gfl/game.h"
#include "gfl/generic.h"
#include "gfl/strong.h"

namespace {

using namespace gfl;

void BM_BuildApproximant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Approximant ap = BuildApproximant(n, 2);
    benchmark::DoNotOptimize(ap.graph.order());
  }
}
BENCHMARK(BM_BuildApproximant)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ClosureStar(benchmark::State& state) {
  const Approximant ap = BuildApproximant(2, 2);
  const VertexSet s{0, 5, 17};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClosureStar(ap.graph, s).closure.size());
  }
}
BENCHMARK(BM_ClosureStar);

void BM_EvaluateRank2(benchmark::State& state) {
  const Approximant ap = BuildApproximant(1, 2);
  const Formula f = ParseSentence("forall x. exists y. R(x, y) | ~x = y");
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(ap.graph, f));
}
BENCHMARK(BM_EvaluateRank2)->Unit(benchmark::kMicrosecond);

void BM_EvaluateTriangle(benchmark::State& state) {
  const Approximant ap = BuildApproximant(2, 2);
  const Formula f = ParseSentence(
      "exists x. exists y. exists z. R(x, y) & R(y, z) & R(x, z)");
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(ap.graph, f));
}
BENCHMARK(BM_EvaluateTriangle)->Unit(benchmark::kMillisecond);

void BM_EfSelf(benchmark::State& state) {
  const Approximant ap = BuildApproximant(1, 2);
  const int k = static_cast<int>(state.range(0));
  GameOptions opt;
  opt.isomorphism_shortcut = false;
  opt.capacity.game_vertices = 5000;
  const VertexPair start[] = {{0, 0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(EfGame(ap.graph, ap.graph, k, start, opt).winner);
  }
}
BENCHMARK(BM_EfSelf)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
