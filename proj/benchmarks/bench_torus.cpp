#include <benchmark/benchmark.h>

#include <random>

#include "qclus/torus.hpp"

using namespace qclus;

namespace {

TorusElem dense_elem(const SkewFormPtr& f, int spread, int qspread) {
  TorusElem r(f);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> c(-4, 4), q(-qspread, qspread);
  std::vector<long long> idx(f->dim(), 0);
  for (int a = 0; a <= spread; ++a)
    for (int b = 0; b <= spread; ++b)
      r.add_term({a, b}, QCoeff::term(c(rng), q(rng)));
  return r;
}

void BM_torus_mul(benchmark::State& state) {
  auto f = std::make_shared<SkewForm>(Mat{{0, 1}, {-1, 0}});
  TorusElem a = dense_elem(f, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_torus_mul)->Arg(4)->Arg(8)->Arg(12);

void BM_series_inverse(benchmark::State& state) {
  auto f = std::make_shared<SkewForm>(Mat{{0, 1}, {-1, 0}});
  int N = static_cast<int>(state.range(0));
  QSeries s = QSeries::unit(f, N) + QSeries::monomial(f, {1, 0}, N, QCoeff::term(2, 1)) +
              QSeries::monomial(f, {1, 1}, N, QCoeff::term(1, -1)) +
              QSeries::monomial(f, {0, 1}, N, QCoeff(3));
  for (auto _ : state) benchmark::DoNotOptimize(s.inverse());
}
BENCHMARK(BM_series_inverse)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
