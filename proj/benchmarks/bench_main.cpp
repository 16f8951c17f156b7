#include <benchmark/benchmark.h>

#include "taylorcert/galois.hpp"
#include "taylorcert/modp.hpp"
#include "taylorcert/newton_polygon.hpp"
#include "taylorcert/schur.hpp"

using namespace taylorcert;

static void BM_ScaledTaylorPoly(benchmark::State& state) {
  const auto spec = TaylorSpec::exp_sum(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scaled_taylor_poly(spec));
}
BENCHMARK(BM_ScaledTaylorPoly)->Arg(16)->Arg(64)->Arg(256);

static void BM_BuildNewtonPolygon(benchmark::State& state) {
  const RatPoly f = make_taylor_poly(TaylorSpec::exp_sum(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_np(f, 2));
}
BENCHMARK(BM_BuildNewtonPolygon)->Arg(16)->Arg(64)->Arg(256);

static void BM_FactorModP(benchmark::State& state) {
  const ModPoly f = reduce_mod(scaled_taylor_poly(TaylorSpec::exp_sum(static_cast<unsigned>(state.range(0)))), 10007);
  for (auto _ : state) benchmark::DoNotOptimize(factor_modp(f));
}
BENCHMARK(BM_FactorModP)->Arg(7)->Arg(20)->Arg(40);

static void BM_CertifyExpSum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_exp_sum(n));
}
BENCHMARK(BM_CertifyExpSum)->Arg(4)->Arg(64)->Arg(128);

static void BM_DiscriminantClosedForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_closed_form(n));
}
BENCHMARK(BM_DiscriminantClosedForm)->Arg(13)->Arg(100)->Arg(200);

static void BM_DiscriminantResultant(benchmark::State& state) {
  const IntPoly f = scaled_taylor_poly(TaylorSpec::exp_sum(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_resultant(f));
}
BENCHMARK(BM_DiscriminantResultant)->Arg(8)->Arg(12)->Arg(24);

static void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(n));
}
BENCHMARK(BM_Classify)->Arg(7)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
