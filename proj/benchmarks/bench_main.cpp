#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "sbpstab/dg_burgers.hpp"
#include "sbpstab/dg_euler2d.hpp"
#include "sbpstab/spectral.hpp"

using namespace sbpstab;

namespace {

Vector burgers_baseflow(const Mesh1D& mesh, const SbpOperators& ops) {
  return project_function(
      mesh, ops, [](double x) { return std::sin(std::numbers::pi * x - 0.7) + 2.0; }, 1, ops.degree);
}

void BM_BurgersRhs(benchmark::State& state) {
  const Mesh1D mesh{static_cast<int>(state.range(0)), -1.0, 1.0};
  const SbpOperators ops = build_lgl_operators(3);
  const BurgersDgsem dg(mesh, ops, {2.0 / 3.0, {burgers::FluxId::EntropyConserving}, false});
  const Vector u = burgers_baseflow(mesh, ops);
  for (auto _ : state) benchmark::DoNotOptimize(dg.rhs(u));
  state.SetItemsProcessed(state.iterations() * dg.dofs());
}
BENCHMARK(BM_BurgersRhs)->Arg(10)->Arg(40)->Arg(160);

void BM_EulerRhs(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Mesh2D mesh{k, k, -1.0, 1.0, -1.0, 1.0};
  const auto flux = static_cast<euler::FluxId>(state.range(1));
  const EulerDgsem2D dg(mesh, build_lgl_operators(5), {flux, euler::FluxId::Rusanov});
  const EulerField2D wave = initialize_density_wave(mesh, 5, 0.98);
  for (auto _ : state) benchmark::DoNotOptimize(dg.rhs(wave.values));
  state.SetItemsProcessed(state.iterations() * dg.dofs());
  state.SetLabel(std::string(euler::to_string(flux)));
}
BENCHMARK(BM_EulerRhs)
    ->Args({4, static_cast<int>(euler::FluxId::Central)})
    ->Args({4, static_cast<int>(euler::FluxId::Chandrashekar)})
    ->Args({8, static_cast<int>(euler::FluxId::Chandrashekar)});

void BM_FdJacobianBurgers(benchmark::State& state) {
  const Mesh1D mesh{static_cast<int>(state.range(0)), -1.0, 1.0};
  const SbpOperators ops = build_lgl_operators(3);
  const BurgersDgsem dg(mesh, ops, {2.0 / 3.0, {burgers::FluxId::EntropyConserving}, false});
  const Vector base = burgers_baseflow(mesh, ops);
  for (auto _ : state) benchmark::DoNotOptimize(fd_jacobian(dg.as_operator(), base));
}
BENCHMARK(BM_FdJacobianBurgers)->Arg(10)->Arg(40);

void BM_Eigenspectrum(benchmark::State& state) {
  const Mesh1D mesh{static_cast<int>(state.range(0)), -1.0, 1.0};
  const SbpOperators ops = build_lgl_operators(3);
  const BurgersDgsem dg(mesh, ops, {2.0 / 3.0, {burgers::FluxId::EntropyConserving}, false});
  const Matrix jac = fd_jacobian(dg.as_operator(), burgers_baseflow(mesh, ops));
  for (auto _ : state) benchmark::DoNotOptimize(eigenspectrum(jac));
}
BENCHMARK(BM_Eigenspectrum)->Arg(10)->Arg(40)->Arg(160);

}  // namespace
BENCHMARK_MAIN();
