#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hlab/asymptotic_fit.hpp"
#include "hlab/combinatorics.hpp"
#include "hlab/curve.hpp"
#include "hlab/greens.hpp"
#include "hlab/mellin.hpp"
#include "hlab/smooth_profile.hpp"

namespace {

void BM_MellinContinued(benchmark::State& state) {
  const hlab::SmoothProfile f = hlab::odd_bump_profile();
  const hlab::Complex alpha(-7.5L, 0.7L);
  for (auto _ : state) benchmark::DoNotOptimize(hlab::mellin(f, alpha));
}
BENCHMARK(BM_MellinContinued);

void BM_MellinConvergent(benchmark::State& state) {
  const hlab::SmoothProfile f = hlab::odd_bump_profile();
  for (auto _ : state) benchmark::DoNotOptimize(hlab::mellin(f, hlab::Complex(2.5L)));
}
BENCHMARK(BM_MellinConvergent);

void BM_RieszSeriesPairing(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  hlab::Point u(d, 0);
  u[0] = 1;
  const hlab::TimelikeCurve w = hlab::TimelikeCurve::straight_line(hlab::Point(d, 0), u);
  const hlab::SmoothProfile g = hlab::dilated(hlab::odd_bump_profile(), 0.4L);
  hlab::GreensFamily fam;
  fam.dimension = d;
  fam.mass = 0.2L;
  for (auto _ : state) benchmark::DoNotOptimize(hlab::RieszSeriesPairing(fam, w, g, 0.7L).evaluate(0.2L));
}
BENCHMARK(BM_RieszSeriesPairing)->Arg(2)->Arg(4);

void BM_FitLadder(benchmark::State& state) {
  std::vector<hlab::LadderSample> samples;
  for (hlab::Real t : hlab::geometric_grid(0.4L, 0.75L, 24))
    samples.push_back({t, hlab::Complex(2 / t - 3 * t + std::pow(t, 3) * std::cos(t))});
  const hlab::ExponentLadder ladder = hlab::ExponentLadder::arithmetic(-1, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hlab::fit_ladder(samples, ladder));
}
BENCHMARK(BM_FitLadder);

void BM_VerifyLeftInverse(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlab::verify_left_inverse(k, 2, 5));
}
BENCHMARK(BM_VerifyLeftInverse)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
