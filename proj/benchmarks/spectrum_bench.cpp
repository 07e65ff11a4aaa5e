#include <benchmark/benchmark.h>

#include <vector>

#include "rotorqm/cylinder.hpp"
#include "rotorqm/shell.hpp"

namespace {

using namespace rotorqm;

const RotatingFrame kFrame{-1e7, 1e-5};

void BM_FluxSpectrum(benchmark::State& state) {
  const auto electron = Particle::electron();
  const FluxSpec flux{2.0};
  for (auto _ : state) {
    for (int p = -10; p <= 30; ++p)
      benchmark::DoNotOptimize(shell::flux_spectrum(kFrame, electron, flux, p, 0.0, Sector::Plus));
  }
}
BENCHMARK(BM_FluxSpectrum);

void BM_ShellCensus(benchmark::State& state) {
  const auto electron = Particle::electron();
  const FluxSpec flux{2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        shell::negative_energy_census_shell(kFrame, electron, flux, -100, 100, Sector::Plus));
  }
}
BENCHMARK(BM_ShellCensus);

void BM_CylinderCensus(benchmark::State& state) {
  const auto electron = Particle::electron();
  const int s_max = static_cast<int>(state.range(0));
  cylinder::negative_energy_census_3d(kFrame, electron, BoundaryCondition::Dirichlet, 10, s_max);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cylinder::negative_energy_census_3d(
        kFrame, electron, BoundaryCondition::Dirichlet, 10, s_max));
  }
}
BENCHMARK(BM_CylinderCensus)->Arg(5)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_ModeWavefunction(benchmark::State& state) {
  const auto mode = cylinder::make_mode(kFrame, Particle::electron(), 1, 5,
                                        BoundaryCondition::Dirichlet, 0.0, Sector::Plus);
  double r = 0.0;
  for (auto _ : state) {
    r += 1e-8;
    if (r > 1e-5) r = 0.0;
    benchmark::DoNotOptimize(cylinder::mode_wavefunction(mode, r, 0.3, 0.0, 1e-9));
  }
}
BENCHMARK(BM_ModeWavefunction);

void BM_AnomalousBeat(benchmark::State& state) {
  const auto electron = Particle::electron();
  std::vector<double> r(64), t(64);
  const double period = cylinder::beat_period(kFrame, 1);
  for (int i = 0; i < 64; ++i) {
    r[i] = 1e-5 * i / 63.0;
    t[i] = 2.0 * period * i / 63.0;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cylinder::anomalous_interference(
        kFrame, electron, 1, 5, BoundaryCondition::Dirichlet, r, t));
  }
  state.SetItemsProcessed(state.iterations() * 64 * 64);
}
BENCHMARK(BM_AnomalousBeat)->Unit(benchmark::kMicrosecond);

}  // namespace
