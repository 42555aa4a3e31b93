#include <benchmark/benchmark.h>

#include <cmath>

#include "ssblow/cylsim/poisson.hpp"
#include "ssblow/cylsim/stepper.hpp"
#include "ssblow/hierarchy/report.hpp"

using namespace ssblow;

namespace {

void BM_DeriveSingle(benchmark::State& state) {
  const auto spec = hierarchy::AnsatzSpec::single(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hierarchy::derive_hierarchy(spec));
}
BENCHMARK(BM_DeriveSingle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeriveGeneralized(benchmark::State& state) {
  const auto spec = hierarchy::AnsatzSpec::generalized(1);
  for (auto _ : state) benchmark::DoNotOptimize(hierarchy::derive_hierarchy(spec));
}
BENCHMARK(BM_DeriveGeneralized)->Unit(benchmark::kMillisecond);

cylsim::CylGrid grid_for(std::int64_t nr) {
  cylsim::CylGrid g;
  g.nr = static_cast<std::size_t>(nr) + 1;
  g.nz = 2 * static_cast<std::size_t>(nr);
  return g;
}

// Assembly plus sparse LU factorization.
void BM_PoissonFactorize(benchmark::State& state) {
  const auto g = grid_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cylsim::PoissonSolver(g));
}
BENCHMARK(BM_PoissonFactorize)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

// Back-substitution with a reused factorization.
void BM_PoissonSolve(benchmark::State& state) {
  const auto g = grid_for(state.range(0));
  const cylsim::PoissonSolver solver(g);
  const auto omega = g.sample([](double r, double z) { return std::sin(M_PI * z) * (1.0 - r) * (r - 0.5); });
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(omega));
}
BENCHMARK(BM_PoissonSolve)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Rk4Step(benchmark::State& state) {
  const auto g = grid_for(state.range(0));
  cylsim::Stepper stepper(g, {});
  auto s = stepper.make_state(g.sample([](double r, double z) { return std::exp(-((r - 0.9) * (r - 0.9) + z * z) / 0.01); }),
                              g.zeros(), 0.0);
  const double dt = 0.5 * stepper.max_stable_dt(s);
  for (auto _ : state) benchmark::DoNotOptimize(stepper.step(s, dt));
}
BENCHMARK(BM_Rk4Step)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
