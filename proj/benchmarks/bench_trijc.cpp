#include <benchmark/benchmark.h>

#include "trijc/dynamics.hpp"
#include "trijc/gme.hpp"
#include "trijc/states.hpp"

using namespace trijc;

namespace {

const PartyList kAtoms = {Party::A, Party::B, Party::C};

DensityMatrix evolved_atoms(double gt) {
  JCConfig cfg;
  cfg.alpha = cfg.gamma = 1.0;
  cfg.beta = cfg.kappa = 1.0;
  return reduce(evolve(assemble_initial(cfg), gt), kAtoms);
}

}  // namespace

static void BM_Eigh(benchmark::State& state) {
  const auto rho = assemble_initial({});
  const int d = static_cast<int>(state.range(0));
  const ComplexMatrix m = rho.matrix().topLeftCorner(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(m).values.data());
}
BENCHMARK(BM_Eigh)->Arg(8)->Arg(64)->Arg(216);

static void BM_GlobalUnitary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(global_unitary(1.3, 3).data());
}
BENCHMARK(BM_GlobalUnitary);

static void BM_Evolve(benchmark::State& state) {
  const auto rho0 = assemble_initial({});
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho0, 1.3).matrix().data());
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMillisecond);

static void BM_OracleEvolve(benchmark::State& state) {
  const auto rho0 = assemble_initial({});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_evolve(rho0, 1.3).matrix().data());
}
BENCHMARK(BM_OracleEvolve)->Unit(benchmark::kMillisecond);

static void BM_PptMixture(benchmark::State& state) {
  const auto abc = evolved_atoms(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_mixture_measure(abc, kAtoms).value);
  }
}
BENCHMARK(BM_PptMixture)->Unit(benchmark::kMillisecond);

static void BM_PptMixtureTwoQubits(benchmark::State& state) {
  const auto ab = werner_pair(0.8, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_mixture_measure(ab, {Party::A, Party::B}).value);
  }
}
BENCHMARK(BM_PptMixtureTwoQubits)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
