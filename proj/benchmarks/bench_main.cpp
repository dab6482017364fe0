// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "entrobust/analytic.hpp"
#include "entrobust/optim.hpp"
#include "entrobust/sampling.hpp"
#include "entrobust/states.hpp"
#include "entrobust/wootters.hpp"

namespace {

using namespace entrobust;

void BM_EigHermitian(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx(rng.normal(), rng.normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16)->Arg(64);

void BM_WoottersDecompose(benchmark::State& state) {
  Rng rng(2);
  DensityMatrix rho = sample_density({2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(wootters_decompose(rho));
}
BENCHMARK(BM_WoottersDecompose);

void BM_RobustnessBdAnalytic(benchmark::State& state) {
  BdParams p{{0.7, 0.1, 0.1, 0.1}};
  for (auto _ : state) benchmark::DoNotOptimize(robustness_bd(p));
}
BENCHMARK(BM_RobustnessBdAnalytic);

void BM_RobustnessPptSdp2x2(benchmark::State& state) {
  DensityMatrix rho = bd_state({{0.7, 0.1, 0.1, 0.1}});
  for (auto _ : state) benchmark::DoNotOptimize(robustness_ppt_sdp(rho, 1e-9));
}
BENCHMARK(BM_RobustnessPptSdp2x2);

void BM_RobustnessPptSdp2x3(benchmark::State& state) {
  DensityMatrix rho = bd23_state({{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}});
  for (auto _ : state) benchmark::DoNotOptimize(robustness_ppt_sdp(rho, 1e-9));
}
BENCHMARK(BM_RobustnessPptSdp2x3);

void BM_FamilyOracleBd(benchmark::State& state) {
  FamilyDescriptor d = BdParams{{0.7, 0.1, 0.1, 0.1}};
  for (auto _ : state) benchmark::DoNotOptimize(robustness_family_lp(d));
}
BENCHMARK(BM_FamilyOracleBd);

void BM_FamilyOracleBd23(benchmark::State& state) {
  FamilyDescriptor d = Bd23Params{{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}};
  for (auto _ : state) benchmark::DoNotOptimize(robustness_family_lp(d));
}
BENCHMARK(BM_FamilyOracleBd23);

void BM_Bd23Reduction(benchmark::State& state) {
  std::array<double, 6> p{0.6, 0.0, 0.1, 0.1, 0.1, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(bd23_diag_robustness(p));
}
BENCHMARK(BM_Bd23Reduction);

}  // namespace

BENCHMARK_MAIN();
