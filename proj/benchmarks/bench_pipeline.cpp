// Copyright 2026 The subrec Authors
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

#include "subrec/algebra.hpp"
#include "subrec/channel.hpp"
#include "subrec/correctability.hpp"
#include "subrec/demos.hpp"
#include "subrec/recovery.hpp"
#include "subrec/ucc.hpp"

namespace {

// Planted instance with d = 2 * dA * dB; range(0) = dA, range(1) = dB.
subrec::Demo make_planted(const benchmark::State& state) {
  subrec::DemoSpec spec;
  spec.kind = subrec::DemoKind::kPlanted;
  spec.d_a = state.range(0);
  spec.d_b = state.range(1);
  spec.dim = 2 * spec.d_a * spec.d_b;
  spec.noise_kraus = 3;
  spec.seed = 3;
  return subrec::demo_build(spec);
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({2, 1})->Args({2, 2})->Args({2, 4})->Args({4, 2});
}

void BM_CheckCorrectable(benchmark::State& state) {
  const auto demo = make_planted(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(subrec::check_correctable(demo.channel, *demo.code));
}
BENCHMARK(BM_CheckCorrectable)->Apply(shapes);

void BM_ConstructRecovery(benchmark::State& state) {
  const auto demo = make_planted(state);
  const auto cert = subrec::check_correctable(demo.channel, *demo.code);
  for (auto _ : state)
    benchmark::DoNotOptimize(subrec::construct_recovery(demo.channel, *demo.code, cert));
}
BENCHMARK(BM_ConstructRecovery)->Apply(shapes);

void BM_AlgebraStructure(benchmark::State& state) {
  const auto demo = make_planted(state);
  const auto ee = subrec::compose(subrec::dual(demo.channel), demo.channel);
  const auto basis = subrec::fixed_point_basis(subrec::to_superoperator(ee));
  for (auto _ : state) benchmark::DoNotOptimize(subrec::algebra_structure(basis, 1));
}
BENCHMARK(BM_AlgebraStructure)->Apply(shapes);

void BM_FindUcc(benchmark::State& state) {
  const auto demo = make_planted(state);
  for (auto _ : state) benchmark::DoNotOptimize(subrec::find_ucc(demo.channel, 1));
}
BENCHMARK(BM_FindUcc)->Apply(shapes)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
