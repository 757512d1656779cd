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

#include "subrec/linalg.hpp"
#include "subrec/random.hpp"

namespace {

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<subrec::Index>(state.range(0));
  subrec::Rng rng(7);
  const subrec::ComplexMatrix h = rng.hermitian(n);
  for (auto _ : state) benchmark::DoNotOptimize(subrec::hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 256);

void BM_NullSpace(benchmark::State& state) {
  const auto n = static_cast<subrec::Index>(state.range(0));
  subrec::Rng rng(11);
  // rank n/2
  const subrec::ComplexMatrix a = rng.ginibre(n, n / 2) * rng.ginibre(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(subrec::null_space(a));
}
BENCHMARK(BM_NullSpace)->RangeMultiplier(2)->Range(8, 256);

}  // namespace
BENCHMARK_MAIN();
