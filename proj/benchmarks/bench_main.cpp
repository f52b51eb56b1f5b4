#include <benchmark/benchmark.h>

#include "detline/boundary_grassmannian.hpp"
#include "detline/chern_series.hpp"
#include "detline/interval_cp1.hpp"
#include "detline/random.hpp"
#include "detline/specfun.hpp"

using namespace detline;

static void BM_HurwitzZeta(benchmark::State& state) {
  const specfun::HurwitzParams p{{0.3, 1.7}, 0.42, 8, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hurwitz_zeta(p));
}
BENCHMARK(BM_HurwitzZeta)->Arg(20)->Arg(50)->Arg(200);

static void BM_HurwitzDs0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hurwitz_zeta_ds0(0.37));
}
BENCHMARK(BM_HurwitzDs0);

static void BM_ZetaDetSpectral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cp1::zeta_det_spectral({0.3, -0.2}));
}
BENCHMARK(BM_ZetaDetSpectral);

static void BM_QuillenCurvatureFd(benchmark::State& state) {
  const specfun::FdStencil st{specfun::kDefaultFdStep, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cp1::quillen_curvature_fd({0.3, -0.2}, st));
}
BENCHMARK(BM_QuillenCurvatureFd)->Arg(2)->Arg(4);

static void BM_FredholmDet(benchmark::State& state) {
  auto g = rng::stream(1, "bench.fredholm");
  const auto op = rng::random_perturbation(g, grassmannian::ModeWindow(static_cast<int>(state.range(0))), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(grassmannian::fredholm_det(op));
}
BENCHMARK(BM_FredholmDet)->Arg(4)->Arg(16)->Arg(64);

static void BM_CurvatureRotatedFamily(benchmark::State& state) {
  const grassmannian::ModeWindow w(static_cast<int>(state.range(0)));
  const auto fam = grassmannian::rotated_family(w, -1, 0);
  const auto base = grassmannian::spectral_projection(w, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(grassmannian::curvature_rkw(fam, base, {0.4, 0.3}));
}
BENCHMARK(BM_CurvatureRotatedFamily)->Arg(3)->Arg(8);

static void BM_ToddSeries(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chern::todd_series(cap));
}
BENCHMARK(BM_ToddSeries)->Arg(8)->Arg(16);
BENCHMARK_MAIN();
