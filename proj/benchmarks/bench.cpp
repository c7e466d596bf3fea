#include <benchmark/benchmark.h>

#include "hgm/continuation.hpp"

namespace {

using namespace hgm;

void BM_MatMul(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(1));
  FCParams params = random_fc(1, 7);
  Complex a = unit_exp(params.a1, prec);
  CMatrix m(n, prec);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m * m);
  }
}
BENCHMARK(BM_MatMul)->Args({8, 256})->Args({32, 256})->Args({64, 256})->Args({64, 128});

void BM_BuildGHG(benchmark::State& state) {
  GHGParams params = random_ghg(static_cast<size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_circuit_set(params, 256));
  }
}
BENCHMARK(BM_BuildGHG)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildFC(benchmark::State& state) {
  FCParams params = random_fc(static_cast<size_t>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_circuit_set_fc(params, 256));
  }
}
BENCHMARK(BM_BuildFC)->Arg(2)->Arg(4)->Arg(5);

void BM_Pfq(benchmark::State& state) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(0));
  std::vector<Rational> a{Rational(1, 3), Rational(1, 5)};
  std::vector<Rational> b{Rational(1, 2)};
  Complex x(Real::from_fraction("1", "2", prec), Real(prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_pfq(a, b, x, prec));
  }
}
BENCHMARK(BM_Pfq)->Arg(128)->Arg(256)->Arg(512);

void BM_Monodromy(benchmark::State& state) {
  GHGParams params{{Rational(1, 3), Rational(1, 5)}, {Rational(1, 2)}};
  LoopSpec loop{LoopSpec::Kind::around_one, Rational(1, 10)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_monodromy(params, loop, 128));
  }
}
BENCHMARK(BM_Monodromy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
