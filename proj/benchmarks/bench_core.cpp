#include <benchmark/benchmark.h>

#include "dads/analysis.hpp"
#include "dads/scenario_io.hpp"
#include "dads/sim.hpp"

using namespace dads;

namespace {

const PlantModel& di_plant() {
  static const PlantModel plant = double_integrator_plant();
  return plant;
}

const ClfBundle& di_clf() {
  static const ClfBundle clf = double_integrator_clf(0.5);
  return clf;
}

void BM_plant_rhs(benchmark::State& state) {
  const Vec y{1.0, 2.0}, u{10.0}, th{1.0, 1.0}, d{0.5}, b{0.01};
  for (auto _ : state) {
    Vec dy = plant_rhs(di_plant(), y, u, th, d, b);
    benchmark::DoNotOptimize(dy);
  }
}
BENCHMARK(BM_plant_rhs);

void BM_gain_simplified(benchmark::State& state) {
  const DadsParams p{0.005, 20.0, 1.0, 0.1, GainVariant::Simplified};
  const Vec y{1.0, 0.0};
  for (auto _ : state) {
    Vec r = gain_simplified(di_plant(), di_clf(), p, y, 0.11);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_gain_simplified);

void BM_gain_full(benchmark::State& state) {
  const DadsParams p{0.005, 20.0, 1.0, 0.5, GainVariant::Full};
  const Vec y{1.0, 0.0};
  for (auto _ : state) {
    Vec r = gain_full(di_plant(), di_clf(), p, y, 1.5);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_gain_full);

void BM_closed_loop_step(benchmark::State& state) {
  const ScenarioSpec spec = preset_spec("dads-sin");
  const Scenario sc = build_scenario(spec);
  const OdeRhs rhs = [&sc](double t, const Vec& x) {
    const Vec y(x.begin(), x.begin() + 2);
    const Vec u = dads_control(sc.plant, sc.clf, sc.controller.dads, y, x[2]);
    Vec dy = plant_rhs(sc.plant, y, u, sc.disturbance.theta.eval(t),
                       sc.disturbance.d.eval(t), sc.disturbance.b.eval(t));
    dy.push_back(adaptation_rate(sc.clf, sc.controller.dads, y, x[2]));
    return dy;
  };
  Vec x{1.0, 0.0, 0.11};
  double t = 0.0;
  for (auto _ : state) {
    x = rk4_step(rhs, t, x, 1e-4);
    t += 1e-4;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_closed_loop_step);

void BM_integrate_benchmark_second(benchmark::State& state) {
  ScenarioSpec spec = preset_spec("dads-sin");
  spec.horizon = 1.0;
  const Scenario sc = build_scenario(spec);
  for (auto _ : state) {
    Trajectory traj = integrate(sc);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_integrate_benchmark_second)->Unit(benchmark::kMillisecond);

void BM_dads_certificate(benchmark::State& state) {
  ScenarioSpec spec = preset_spec("dads-sin");
  spec.horizon = 1.0;
  const Scenario sc = build_scenario(spec);
  const Trajectory traj = integrate(sc);
  for (auto _ : state) {
    CertificateReport rep =
        dads_certificate(sc.plant, traj, sc.clf, sc.controller.dads, 0.01);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_dads_certificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
