#include <benchmark/benchmark.h>

#include "cavity/dynamics.hpp"
#include "cavity/effective.hpp"
#include "cavity/rpm.hpp"

namespace {

cavity::ModelParams params(int n) {
  return {.n_photons = n, .omega0 = 1.0, .g = 1.2, .j_tun = 0.8};
}

void BM_RpmResolvent(benchmark::State& state) {
  const auto p = params(static_cast<int>(state.range(0)));
  const cavity::Complex z(100.3, -0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavity::rpm::rpm_resolvent(p, z));
  }
}
BENCHMARK(BM_RpmResolvent)->Arg(20)->Arg(100)->Arg(1000);

void BM_Diagonalize(benchmark::State& state) {
  const auto h = cavity::effective::build_sector_hamiltonian(
      params(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavity::effective::diagonalize(h));
  }
}
BENCHMARK(BM_Diagonalize)->Arg(20)->Arg(100)->Arg(400);

// Full figure-style density: 4001 energies at N = 100.
void BM_RpmSpectra(benchmark::State& state) {
  const auto p = params(100);
  const auto grid = cavity::linear_grid(-80.0, 280.0, 4001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavity::rpm::rpm_spectra(p, grid, 0.01));
  }
}
BENCHMARK(BM_RpmSpectra);

void BM_EvolveDefaultWindow(benchmark::State& state) {
  const auto p = params(100);
  const auto [s00, sN0] = cavity::effective::sector_line_spectra(p);
  const double dt = cavity::dynamics::default_time_step(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cavity::dynamics::evolve(s00, sN0, cavity::dynamics::kDefaultTMax, dt));
  }
}
BENCHMARK(BM_EvolveDefaultWindow);

}  // namespace

BENCHMARK_MAIN();
