#include <benchmark/benchmark.h>

#include <random>

#include "mnchain/canon.hpp"
#include "mnchain/dynamics.hpp"
#include "mnchain/model.hpp"
#include "mnchain/pfaffian.hpp"

using namespace mnchain;

static void BM_SvdCanonical(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  auto p = ModelParams::uniform(L, 1.0, 1.3);
  auto sec = make_sector(SectorFamily::HomogeneousPlus, L);
  auto b = build_b_matrix(p, sec);
  int hint = b_matrix_det_sign(p, sec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svd_canonical(b.m, hint));
  }
  state.SetComplexityN(L);
}
BENCHMARK(BM_SvdCanonical)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_QuenchStep(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  auto setup = make_boundary_quench(L, 1.0, 1.0, 0.0, 1e-6);
  double tau = 0.0;
  for (auto _ : state) {
    tau += 0.1;
    auto corr = quench_correlations_at(setup, tau);
    auto nn = nn_correlators(corr, setup.sector);
    benchmark::DoNotOptimize(nn.C.sum() + nn.S.sum());
  }
  state.SetComplexityN(L);
}
BENCHMARK(BM_QuenchStep)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_Pfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = g(rng);
      a(j, i) = -a(i, j);
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfaffian(a));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Pfaffian)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_BlochRamp(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = kz_linear_ramp(L, 1.0, 0.0, 4.0, 4.0, 0.01);
    benchmark::DoNotOptimize(res.n_excitation);
  }
  state.SetComplexityN(L);
}
BENCHMARK(BM_BlochRamp)->RangeMultiplier(2)->Range(64, 512)->Complexity();

BENCHMARK_MAIN();
