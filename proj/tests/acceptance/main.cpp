// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Expects a writable working directory; artifacts go under
// acceptance_out/.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dads/analysis.hpp"
#include "dads/clf.hpp"
#include "dads/controller.hpp"
#include "dads/scenario_io.hpp"
#include "dads/sim.hpp"

using namespace dads;
namespace fs = std::filesystem;

namespace {

struct Harness {
  int failures = 0;

  void check(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

std::string fmt(double v) { return format_double(v); }

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PresetResults {
  TailStats tail;
  DriftReport drift;
  DeadzoneReport deadzone;
  CertificateReport cert, cert_half;
  bool monotone = true;
  bool rho_finite = true;
};

// Runs one preset at its native dt and at dt/2, extracting everything the
// criteria need so the big trajectories can be freed immediately.
PresetResults run_preset_pair(const std::string& name) {
  PresetResults out;
  const ScenarioSpec spec = preset_spec(name);
  const Scenario sc = build_scenario(spec);
  const bool is_dads = spec.kind == ControllerConfig::Kind::Dads;
  {
    const Trajectory traj = integrate(sc);
    out.tail = tail_stats(traj, 0.25);
    out.drift = drift_metric(traj, 0.5);
    if (is_dads) {
      out.deadzone = deadzone_check(traj, spec.epsilon);
      for (std::size_t k = 0; k + 1 < traj.samples() && out.monotone; ++k)
        if (traj.rho[k + 1] < traj.rho[k]) out.monotone = false;
      out.cert = dads_certificate(sc.plant, traj, sc.clf, sc.controller.dads,
                                  b_floor(spec.b));
    } else {
      out.cert = c1_certificate(traj, sc.controller.c1);
    }
    out.rho_finite = std::isfinite(out.drift.rho_end);
  }
  {
    Scenario half = sc;
    half.dt = sc.dt / 2.0;
    const Trajectory traj = integrate(half);
    out.cert_half = is_dads ? dads_certificate(sc.plant, traj, sc.clf, sc.controller.dads,
                                               b_floor(spec.b))
                            : c1_certificate(traj, sc.controller.c1);
  }
  return out;
}

}  // namespace

int main() {
  Harness h;
  fs::create_directories("acceptance_out");

  // 1. Assumption checks are tight on the radius-5 box.
  {
    const auto start = std::chrono::steady_clock::now();
    const PlantModel plant = double_integrator_plant();
    const ClfBundle clf = double_integrator_clf(0.5);
    const AssumptionReport a = check_assumption_a(plant, clf, 5.0, 101, 10000, 1);
    const AssumptionReport b = check_assumption_b(plant, clf, 5.0, 101, 10000, 1);

    ClfBundle weak_s = clf;
    weak_s.s = {[](const Vec&) { return 0.9 * 1.3125; }};
    const AssumptionReport a_bad = check_assumption_a(plant, weak_s, 5.0, 101, 10000, 1);

    ClfBundle weak_mu = clf;
    const double mu90 = 0.9 * clf.mu({0.0, 0.0});
    weak_mu.mu = [mu90](const Vec&) { return mu90; };
    const AssumptionReport b_bad = check_assumption_b(plant, weak_mu, 5.0, 101, 10000, 1);

    const double secs = elapsed_s(start);
    h.check(1, "assumption tightness",
            a.max_violation <= 1e-9 && b.max_violation <= 1e-9 &&
                a_bad.max_violation > 0.0 && b_bad.max_violation > 0.0 && secs < 5.0,
            "maxA=" + fmt(a.max_violation) + " maxB=" + fmt(b.max_violation) +
                " perturbedA=" + fmt(a_bad.max_violation) + " perturbedB=" +
                fmt(b_bad.max_violation) + " runtime=" + fmt(secs) + "s");
  }

  // 2. Formula oracles at the benchmark starting point.
  {
    const PlantModel plant = double_integrator_plant();
    const ClfBundle clf = double_integrator_clf(0.5);
    DadsParams params{0.005, 20.0, 1.0, 0.1, GainVariant::Simplified};
    const double r = gain_simplified(plant, clf, params, {1.0, 0.0}, 0.11)[0];
    const double u = dads_control(plant, clf, params, {1.0, 0.0}, 0.11)[0];

    const double chi_zero = disturbance_level(0.0, 1.0, 1.0, 1.0, 1, 0.0, 0.0, 1.0, 1.0);
    const double chi_unit = disturbance_level(2.0, 0.0, 1.0, 0.0, 1, 0.0, 0.0, 1.0, 1.0);
    const double chi_bench =
        disturbance_level(2.0, std::sqrt(2.0), 0.01, 0.01, 1, 0.0, 0.0, 1.0, 0.1);

    h.check(2, "formula oracles",
            std::abs(r - 0.240915) <= 1e-5 && std::abs(u - (-0.120458)) <= 1e-5 &&
                chi_zero == 0.0 && std::abs(chi_unit - 1.0) <= 1e-2 &&
                std::abs(chi_bench - 466.50) / 466.50 <= 1e-2,
            "r=" + fmt(r) + " u=" + fmt(u) + " levels=" + fmt(chi_zero) + "," +
                fmt(chi_unit) + "," + fmt(chi_bench));
  }

  // Benchmark preset runs feeding criteria 3, 4, 5, 6 and 8.
  const auto bench_start = std::chrono::steady_clock::now();
  std::map<std::string, PresetResults> presets;
  for (const char* name :
       {"dads-0", "dads-sin", "c1-noleak-0", "c1-leak-0", "c1-noleak-sin", "c1-leak-sin"})
    presets[name] = run_preset_pair(name);
  const double bench_secs = elapsed_s(bench_start);

  // 3. Residual set of the adapted controller.
  {
    const double v0 = presets["dads-0"].tail.max_V;
    const double v1 = presets["dads-sin"].tail.max_V;
    h.check(3, "residual set: tail max V <= 1.5*epsilon",
            v0 <= 0.0075 && v1 <= 0.0075,
            "dads-0=" + fmt(v0) + " dads-sin=" + fmt(v1) + " (12 runs took " +
                fmt(bench_secs) + "s)");
  }

  // 4. Monotone, bounded, drift-free adapted gain.
  {
    const PresetResults& a = presets["dads-0"];
    const PresetResults& b = presets["dads-sin"];
    const bool drift_free =
        a.drift.late_increment <= 0.01 * a.drift.rho_end &&
        b.drift.late_increment <= 0.01 * b.drift.rho_end;
    h.check(4, "gain monotone, finite, last-half increment <= 1%",
            a.monotone && b.monotone && a.rho_finite && b.rho_finite && drift_free,
            "dads-0: rho_end=" + fmt(a.drift.rho_end) + " incr=" +
                fmt(a.drift.late_increment) + "; dads-sin: rho_end=" +
                fmt(b.drift.rho_end) + " incr=" + fmt(b.drift.late_increment));
  }

  // 5. Baseline contrast: no-leakage drift and leakage residual error.
  {
    const DriftReport& drift = presets["c1-noleak-sin"].drift;
    const double leak_tail = presets["c1-leak-sin"].tail.max_y_norm;
    const double dads_tail = presets["dads-sin"].tail.max_y_norm;
    h.check(5, "baseline drift and leakage contrast",
            drift.late_increment > 0.10 * drift.rho_end && leak_tail > dads_tail,
            "c1-noleak-sin incr/rho_end=" + fmt(drift.late_increment / drift.rho_end) +
                "; tail |y|: c1-leak-sin=" + fmt(leak_tail) + " vs dads-sin=" +
                fmt(dads_tail));
  }

  // 6. Lyapunov certificates at dt and dt/2.
  {
    bool pass = true;
    std::string detail;
    for (const auto& [name, res] : presets) {
      const bool ok = res.cert.max_violation <= 1e-6 && res.cert_half.max_violation <= 1e-6 &&
                      res.cert_half.max_violation <=
                          std::max(2.0 * res.cert.max_violation, 1e-12);
      pass = pass && ok;
      detail += name + "=" + fmt(res.cert.max_violation) + "/" +
                fmt(res.cert_half.max_violation) + " ";
    }
    h.check(6, "pointwise certificates hold at dt and dt/2", pass, detail);
  }

  // 7. Exact-regulation corollary with known-benign parameters.
  {
    ScenarioSpec spec = preset_spec("dads-0");
    spec.rho0 = 1.0;
    spec.theta.comp = {Signal::zero(), Signal::zero()};
    spec.b.comp = {Signal::constant(1.0)};
    spec.out_dir = "acceptance_out/regulation";
    const Trajectory traj = integrate(build_scenario(spec));
    const RegulationVerdict verdict = regulation_dichotomy(traj, 0.0, 1.0, spec.kappa);
    h.check(7, "exact regulation with dominated uncertainty",
            verdict.regulated && verdict.final_y_norm <= 1e-3,
            "|y(100)|=" + fmt(verdict.final_y_norm));
  }

  // 8. Deadzone exactness on both adapted-controller presets.
  {
    const double m0 = presets["dads-0"].deadzone.max_rate_in_deadzone;
    const double m1 = presets["dads-sin"].deadzone.max_rate_in_deadzone;
    h.check(8, "recorded rhodot is exactly zero inside the deadzone",
            m0 == 0.0 && m1 == 0.0, "max rates " + fmt(m0) + ", " + fmt(m1));
  }

  // 9. Integrator order on a smooth linear system, and benchmark refinement.
  {
    Scenario rotation;
    rotation.plant.n = 2;
    rotation.plant.m = rotation.plant.p = rotation.plant.q = 1;
    rotation.plant.f = [](const Vec& y) { return Vec{y[1], -y[0]}; };
    rotation.plant.g = {[](const Vec&) { return Vec{0.0, 0.0}; }};
    rotation.plant.phi = {[](const Vec&) { return Vec{0.0}; }};
    rotation.plant.dist = {[](const Vec&) { return Vec{0.0}; }};
    rotation.clf.V = [](const Vec& y) { return 0.5 * (y[0] * y[0] + y[1] * y[1]); };
    rotation.clf.gradV = [](const Vec& y) { return y; };
    rotation.clf.Q = rotation.clf.V;
    rotation.clf.s = {[](const Vec&) { return 0.0; }};
    rotation.clf.delta = {[](const Vec&) { return 0.0; }};
    rotation.clf.mu = [](const Vec&) { return 1.0; };
    rotation.clf.rate_lb = [](double v) { return 0.5 * v; };
    rotation.controller.kind = ControllerConfig::Kind::Dads;
    rotation.controller.dads = {1e6, 20.0, 1.0, 0.1, GainVariant::Simplified};
    rotation.y0 = {1.0, 0.0};
    rotation.rho0 = 0.11;
    rotation.disturbance.d.comp = {Signal::zero()};
    rotation.disturbance.theta.comp = {Signal::zero()};
    rotation.disturbance.b.comp = {Signal::constant(1.0)};
    rotation.horizon = 1.0;
    rotation.dt = 0.05;
    const RefineReport linear = refine_check(rotation);

    const RefineReport bench = refine_check(build_scenario(preset_spec("dads-0")));
    h.check(9, "integrator order and benchmark refinement",
            std::abs(linear.observed_order - 4.0) <= 0.3 && bench.discrepancy <= 1e-6,
            "order=" + fmt(linear.observed_order) + " dads-0 dt-vs-dt/2 gap=" +
                fmt(bench.discrepancy));
  }

  // 10. Reproducibility plumbing: config round trip, byte-identical CSVs,
  // exact schema.
  {
    bool round_trip = true;
    for (const auto& name : preset_names()) {
      const ScenarioSpec spec = preset_spec(name);
      if (!(parse_scenario_text(scenario_to_text(spec), name) == spec)) round_trip = false;
    }

    const ScenarioSpec spec = preset_spec("dads-0");
    const Scenario sc = build_scenario(spec);
    const Trajectory t1 = integrate(sc);
    const Trajectory t2 = integrate(sc);
    emit_csv(t1, spec.stride, "acceptance_out/run1.csv");
    emit_csv(t2, spec.stride, "acceptance_out/run2.csv");
    const std::string csv1 = slurp("acceptance_out/run1.csv");
    const bool identical = !csv1.empty() && csv1 == slurp("acceptance_out/run2.csv");

    const bool schema =
        csv_header(t1) == "t,y1,y2,rho,z,u1,V,rho_dot,d1,theta1,theta2,b1";
    const auto rows = std::count(csv1.begin(), csv1.end(), '\n') - 1;  // minus header

    h.check(10, "round trip, byte-identical CSVs, exact schema",
            round_trip && identical && schema && rows == 10001,
            std::string("round_trip=") + (round_trip ? "yes" : "no") + " identical=" +
                (identical ? "yes" : "no") + " rows=" + std::to_string(rows));
  }

  if (h.failures == 0) {
    std::printf("ACCEPTANCE: all 10 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", h.failures);
  return 1;
}
