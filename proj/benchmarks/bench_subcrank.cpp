#include <benchmark/benchmark.h>

#include "subcrank/harness.hpp"

namespace {

using namespace subcrank;

void BM_GlWeights(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gl_weights(0.5, n));
  }
}
BENCHMARK(BM_GlWeights)->Arg(640)->Arg(10000);

void BM_Assemble2D(benchmark::State& state) {
  const Mesh mesh = build_mesh(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(mesh));
  }
}
BENCHMARK(BM_Assemble2D)->Arg(64)->Arg(128);

void BM_FactorSchemeMatrix(benchmark::State& state) {
  const FemSystem sys = assemble(build_mesh(2, static_cast<int>(state.range(0))));
  SparseMatrix k = 100.0 * sys.mass;
  k += 0.75 * sys.stiffness;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(k));
  }
}
BENCHMARK(BM_FactorSchemeMatrix)->Arg(64)->Arg(128);

void BM_Run1D(benchmark::State& state) {
  const FemSystem sys = assemble(build_mesh(1, 128));
  const Vector load = load_vector(sys.mesh, SpatialProfile::xpow14());
  SchemeConfig cfg;
  cfg.variant = Scheme::cn2;
  cfg.alpha = 0.5;
  cfg.nsteps = static_cast<int>(state.range(0));
  cfg.tau = 1.0 / cfg.nsteps;
  cfg.mass = &sys.mass;
  cfg.stiffness = &sys.stiffness;
  cfg.sources = {SourceTerm{TimeProfile::power(-0.5), SpatialProfile::xpow14(), load}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(cfg));
  }
}
BENCHMARK(BM_Run1D)->Arg(160)->Arg(640);

void BM_Run2D(benchmark::State& state) {
  const FemSystem sys = assemble(build_mesh(2, 64));
  const Vector load = load_vector(sys.mesh, SpatialProfile::box2d());
  SchemeConfig cfg;
  cfg.variant = Scheme::cn2;
  cfg.alpha = 0.5;
  cfg.nsteps = static_cast<int>(state.range(0));
  cfg.tau = 1.0 / cfg.nsteps;
  cfg.mass = &sys.mass;
  cfg.stiffness = &sys.stiffness;
  cfg.sources = {SourceTerm{TimeProfile::power(-0.5), SpatialProfile::box2d(), load}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(cfg));
  }
}
BENCHMARK(BM_Run2D)->Arg(160)->Arg(640)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
