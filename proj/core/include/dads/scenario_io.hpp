#pragma once

// Scenario files, benchmark presets and result emission.
//
// A scenario file is sectioned key/value text:
//
//   [plant]        preset
//   [clf]          preset, c
//   [controller]   kind, then variant/epsilon/gamma/damping/kappa (dads)
//                  or sigma_bar/gamma (sigma-mod)
//   [initial]      y0, rho0, thetahat0 (sigma-mod)
//   [disturbance]  d, theta, b   as signal descriptors
//   [sim]          horizon, dt, blowup_threshold, seed
//   [output]       dir, stride
//
// Signal descriptors: zero | const(v, ...) | sin(amplitude, omega, phase) |
// steps(t:v, t:v, ...), joined with ';' for mixed multi-component signals.
// Unknown sections or keys are rejected; every validation failure names the
// offending key and constraint.

#include <optional>
#include <string>
#include <vector>

#include "dads/analysis.hpp"
#include "dads/sim.hpp"

namespace dads {

/// Plain-data mirror of a Scenario plus output options. Field-wise equality
/// makes the write/parse round trip testable.
struct ScenarioSpec {
  std::string plant_preset = "double-integrator";
  std::string clf_preset = "double-integrator";
  double clf_c = 0.0;

  ControllerConfig::Kind kind = ControllerConfig::Kind::Dads;
  GainVariant variant = GainVariant::Simplified;  // dads only
  double epsilon = 0.0, gamma = 0.0, damping = 0.0, kappa = 0.0;  // dads only (gamma shared)
  double sigma_bar = 0.0;                                         // sigma-mod only

  Vec y0;
  double rho0 = 0.0;
  Vec thetahat0;  // sigma-mod only

  VectorSignal d, theta, b;

  double horizon = 0.0, dt = 0.0, blowup_threshold = 1e8;
  std::uint64_t seed = 1;

  std::string out_dir = "out";
  int stride = 100;

  bool operator==(const ScenarioSpec&) const = default;
};

ScenarioSpec parse_scenario(const std::string& path);
ScenarioSpec parse_scenario_text(const std::string& text, const std::string& origin);

std::string scenario_to_text(const ScenarioSpec& spec);
void write_scenario(const ScenarioSpec& spec, const std::string& path);

/// The six benchmark configurations.
const std::vector<std::string>& preset_names();
ScenarioSpec preset_spec(const std::string& name);

/// Materializes plant, bundle and controller config from a validated spec.
Scenario build_scenario(const ScenarioSpec& spec);

/// Positive infimum over time of the configured b signal, min over channels.
double b_floor(const VectorSignal& b);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

std::string csv_header(const Trajectory& traj);

/// Writes trajectory.csv-style data: every stride-th sample, one row each,
/// LF line endings, full round-trip precision. Repeated calls are
/// byte-identical.
void emit_csv(const Trajectory& traj, int stride, const std::string& path);

struct RunReports {
  TailStats tail;
  double tail_fraction = 0.25;
  DriftReport drift;
  double split = 0.5;
  std::optional<DeadzoneReport> deadzone;
  std::optional<CertificateReport> certificate;
  std::string certificate_note;
  double b_floor = 0.0;
};

/// Standard post-run analysis used by the command-line front end.
RunReports analyze_run(const ScenarioSpec& spec, const Scenario& scenario,
                       const Trajectory& traj);

void write_summary(const ScenarioSpec& spec, const Trajectory& traj,
                   const RunReports& reports, const std::string& path);

}  // namespace dads
