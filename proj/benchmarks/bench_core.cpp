// Copyright 2026 The cohdist Authors
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

#include "cohdist/blocks.hpp"
#include "cohdist/distill.hpp"
#include "cohdist/linalg.hpp"
#include "cohdist/states.hpp"

namespace cohdist {
namespace {

DensityMatrix bench_block_state(Index dim) {
  std::vector<Index> dims;
  std::vector<Index> ranks;
  Index rest = dim;
  while (rest > 0) {
    const Index d = rest >= 3 ? 3 : rest;
    dims.push_back(d);
    ranks.push_back(d > 1 ? d - 1 : 1);
    rest -= d;
  }
  return random_block_state(dims, ranks, 1234);
}

void BM_IrreducibleBlocks(benchmark::State& state) {
  const DensityMatrix rho = bench_block_state(static_cast<Index>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_blocks(rho));
  }
}
BENCHMARK(BM_IrreducibleBlocks)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Distillability(benchmark::State& state) {
  const DensityMatrix rho = bench_block_state(static_cast<Index>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distillability(rho));
  }
}
BENCHMARK(BM_Distillability)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ConstructWitness(benchmark::State& state) {
  const DensityMatrix rho = bench_block_state(static_cast<Index>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_witness(rho));
  }
}
BENCHMARK(BM_ConstructWitness)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_FalsificationTrials(benchmark::State& state) {
  const DensityMatrix rho = random_density(4, 4, 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        falsification_search(rho, state.range(0), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FalsificationTrials)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TensorProduct(benchmark::State& state) {
  const Index d = static_cast<Index>(state.range(0));
  const ComplexMatrix a = random_density(d, d, 5).mat();
  const ComplexMatrix b = random_density(d, d, 6).mat();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_product(a, b));
  }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
}  // namespace cohdist

BENCHMARK_MAIN();
