#include <benchmark/benchmark.h>

#include "zzlab/basilica.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/iso.hpp"
#include "zzlab/parity.hpp"
#include "zzlab/products.hpp"
#include "zzlab/spectral.hpp"

using namespace zzlab;

static void BM_ZigzagProduct(benchmark::State& state) {
  RotationGraph gamma = schreier_graph(static_cast<int>(state.range(0)));
  RotationGraph c4 = cycle_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_product(gamma, c4));
  state.SetComplexityN(gamma.vertex_count());
}
BENCHMARK(BM_ZigzagProduct)->DenseRange(4, 8)->Complexity();

static void BM_ParityDecomposition(benchmark::State& state) {
  RotationGraph g = random_regular_graph(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(parity_decomposition(g));
}
BENCHMARK(BM_ParityDecomposition)->RangeMultiplier(4)->Range(16, 1024);

static void BM_RecognizeDoubleCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Multigraph g = Multigraph::from_rotation(
      zigzag_product(schreier_graph(n), cycle_graph(4)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_double_cycle(g));
}
BENCHMARK(BM_RecognizeDoubleCycle)->DenseRange(3, 7);

static void BM_SymmetricSpectrum(benchmark::State& state) {
  RotationGraph dc = double_cycle(static_cast<int>(state.range(0)));
  IntMatrix adj = dc.adjacency_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(adj));
}
BENCHMARK(BM_SymmetricSpectrum)->RangeMultiplier(2)->Range(16, 256);

static void BM_BasilicaAction(benchmark::State& state) {
  std::string w(static_cast<std::size_t>(state.range(0)), '0');
  for (auto _ : state) {
    w = basilica_act(BasilicaGen::B, w);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_BasilicaAction)->Arg(8)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
