#include <numbers>

#include <benchmark/benchmark.h>

#include "omnihex/controller.hpp"
#include "omnihex/simulator.hpp"
#include "omnihex/wrench_analysis.hpp"
#include "omnihex/zonotope.hpp"

namespace {

using namespace omnihex;

constexpr double kDeg = std::numbers::pi / 180.0;

void BM_DesignObjective(benchmark::State& state) {
  RotorLayout layout;
  double alpha = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_design(alpha, 0.1, 0.5, layout));
    alpha = alpha > 1.5 ? 0.0 : alpha + 1e-3;
  }
}
BENCHMARK(BM_DesignObjective);

void BM_BruteForceRadius(benchmark::State& state) {
  RotorLayout layout;
  layout.alpha = 47.7 * kDeg;
  const Axes u = force_axes(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_inscribed_radius(u, 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BruteForceRadius)->Arg(1000)->Arg(10000);

void BM_OptimizeTilt(benchmark::State& state) {
  OptimizerOptions opt;
  opt.c_f = 0.5;
  opt.grid_step = static_cast<double>(state.range(0)) / 100.0 * kDeg;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_tilt(RotorLayout{}, opt));
}
BENCHMARK(BM_OptimizeTilt)->Arg(100)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_ClosedLoopStep(benchmark::State& state) {
  const Scenario sc = Scenario::standard();
  ClosedLoop loop(sc.vehicle, sc.gains, sc.trajectory, sc.dt, sc.saturation);
  RigidBodyState s = sc.initial;
  double t = 0.0;
  for (auto _ : state) {
    s = loop.step(t, s, Wrench::Zero());
    t += sc.dt;
  }
}
BENCHMARK(BM_ClosedLoopStep);

void BM_Allocate(benchmark::State& state) {
  RotorLayout layout;
  layout.alpha = 47.7 * kDeg;
  const Allocator alloc(allocation_matrix(layout), 1.0);
  const Wrench w(Vec3(0.1, -0.2, 0.3), Vec3(0.0, 0.5, 5.886));
  for (auto _ : state) benchmark::DoNotOptimize(alloc(w));
}
BENCHMARK(BM_Allocate);

}  // namespace
BENCHMARK_MAIN();
