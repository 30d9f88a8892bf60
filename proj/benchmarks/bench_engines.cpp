#include <benchmark/benchmark.h>

#include "qclus/fixtures.hpp"
#include "qclus/gca.hpp"
#include "qclus/gqca.hpp"

using namespace qclus;

namespace {

void BM_g2_fpoly_t3(benchmark::State& state) {
  SeedFile seed = example_seed("g2");
  QuantumEngine eng(seed.pair(), seed.mutation_data());
  for (auto _ : state) benchmark::DoNotOptimize(eng.fpoly({1, 2, 1}));
}
BENCHMARK(BM_g2_fpoly_t3);

void BM_g2_separation_full_path(benchmark::State& state) {
  SeedFile seed = example_seed("g2");
  QuantumEngine eng(seed.pair(), seed.mutation_data());
  for (auto _ : state)
    benchmark::DoNotOptimize(eng.verify_separation({1, 2, 1, 2, 1, 2, 1, 2}));
}
BENCHMARK(BM_g2_separation_full_path);

void BM_rank2_gupta_product(benchmark::State& state) {
  SeedFile seed = example_seed("rank2");
  Mat B(2, Vec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) B[i][j] = seed.Btilde[i][j];
  auto s0 = initial_classical_seed(B, seed.R, seed.z);
  PathData pd = run_path_classical(B, seed.R, {1, 2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gupta_product(pd, s0.ring));
}
BENCHMARK(BM_rank2_gupta_product);

void BM_classical_mutation_chain(benchmark::State& state) {
  SeedFile seed = example_seed("rank2");
  Mat B(2, Vec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) B[i][j] = seed.Btilde[i][j];
  auto s0 = initial_classical_seed(B, seed.R, seed.z);
  std::vector<int> path = {1, 2, 1, 2, 1, 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(run_classical_path(s0, path));
}
BENCHMARK(BM_classical_mutation_chain);

}  // namespace
