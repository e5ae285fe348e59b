#include <benchmark/benchmark.h>

#include "qchaos/bipartite.hpp"
#include "qchaos/channels.hpp"
#include "qchaos/ensembles.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/operator_ent.hpp"
#include "qchaos/spectral_stats.hpp"
#include "qchaos/state_measures.hpp"
#include "qchaos/torus_maps.hpp"

using namespace qchaos;

namespace {

void BM_StandardMapFft(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  StandardMapStepper st({N, 10.0, kGolden, kGolden});
  Vec psi = coherent_state(N, 0.3, 0.4);
  for (auto _ : state) {
    st.apply(psi);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_StandardMapFft)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_StandardMapDense(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Mat U = build_standard_map({N, 10.0, kGolden, kGolden}).U;
  Vec psi = coherent_state(N, 0.3, 0.4);
  for (auto _ : state) {
    psi = U * psi;
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_StandardMapDense)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_EigenphasesGeneral(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Mat U = build_standard_map({N, 10.0, kGolden, kGolden}).U;
  for (auto _ : state) benchmark::DoNotOptimize(linalg::eigvals(U));
}
BENCHMARK(BM_EigenphasesGeneral)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EigenphasesCayley(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Mat U = build_standard_map({N, 10.0, kGolden, kGolden}).U;
  for (auto _ : state) benchmark::DoNotOptimize(linalg::unitary_eigenphases(U));
}
BENCHMARK(BM_EigenphasesCayley)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CueSample(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_cue(N, ++seed).m.data());
}
BENCHMARK(BM_CueSample)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Husimi(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Vec psi = sample_haar_state(N, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wehrl_entropy(husimi(psi)));
}
BENCHMARK(BM_Husimi)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Schmidt(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Vec psi = sample_haar_state(N * N, 4);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt(psi, N, N).S_vN);
}
BENCHMARK(BM_Schmidt)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CoupledStep(benchmark::State& state) {
  CoupledMapParams p;
  p.N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_evolution(p, InitialKind::RandomProduct, 5, 1).S2.back());
}
BENCHMARK(BM_CoupledStep)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ChannelSpectrum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_channel(N, 4, 7).gap);
}
BENCHMARK(BM_ChannelSpectrum)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_OperatorEntanglement(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Mat U = sample_cue(N * N, 5).m;
  for (auto _ : state) benchmark::DoNotOptimize(entangling_power(U, N).e_p);
}
BENCHMARK(BM_OperatorEntanglement)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
