// Command-line front end: scenario runs, benchmark presets, assumption
// checks, Lyapunov certificates and step-size refinement reports.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dads/analysis.hpp"
#include "dads/clf.hpp"
#include "dads/errors.hpp"
#include "dads/scenario_io.hpp"
#include "dads/sim.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 success, 1 internal/io, 2 configuration, 3 blowup,
// 4 certificate above tolerance.
enum ExitCode { kOk = 0, kInternal = 1, kConfig = 2, kBlowup = 3, kCertificate = 4 };

struct Overrides {
  std::optional<double> dt, horizon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> stride;
};

dads::ScenarioSpec resolve_spec(const std::string& arg) {
  if (fs::exists(arg)) return dads::parse_scenario(arg);
  const auto& names = dads::preset_names();
  if (std::find(names.begin(), names.end(), arg) != names.end())
    return dads::preset_spec(arg);
  return dads::preset_spec(arg);  // throws with the list of valid presets
}

dads::ScenarioSpec resolve_spec(const std::string& arg, const Overrides& ov,
                                bool multi_run) {
  dads::ScenarioSpec spec = resolve_spec(arg);
  if (ov.dt) spec.dt = *ov.dt;
  if (ov.horizon) spec.horizon = *ov.horizon;
  if (ov.seed) spec.seed = *ov.seed;
  if (ov.stride) spec.stride = *ov.stride;
  std::optional<std::string> out = ov.out_dir;
  if (const char* env = std::getenv("DADS_OUT_DIR")) out = std::string(env);
  if (out) {
    const std::string stem = fs::path(arg).stem().string();
    spec.out_dir = multi_run ? (fs::path(*out) / stem).string() : *out;
  }
  return spec;
}

int run_one(const std::string& arg, const dads::ScenarioSpec& spec, std::string& log) {
  const dads::Scenario scenario = dads::build_scenario(spec);
  const dads::Trajectory traj = dads::integrate(scenario);
  const dads::RunReports reports = dads::analyze_run(spec, scenario, traj);

  fs::create_directories(spec.out_dir);
  dads::emit_csv(traj, spec.stride, (fs::path(spec.out_dir) / "trajectory.csv").string());
  dads::write_summary(spec, traj, reports,
                      (fs::path(spec.out_dir) / "summary.txt").string());
  dads::write_scenario(spec, (fs::path(spec.out_dir) / "scenario.ini").string());

  log += arg + ": " + std::to_string(traj.samples()) + " samples, tail max V = " +
         dads::format_double(reports.tail.max_V) + ", rho(T) = " +
         dads::format_double(reports.drift.rho_end) + " -> " + spec.out_dir + "\n";
  return kOk;
}

int cmd_run(const std::vector<std::string>& args, const Overrides& ov, int jobs) {
  std::vector<dads::ScenarioSpec> specs;
  for (const auto& arg : args) specs.push_back(resolve_spec(arg, ov, args.size() > 1));

  std::vector<std::string> logs(args.size());
  std::vector<int> codes(args.size(), kOk);
  std::mutex err_mutex;

  auto work = [&](std::size_t i) {
    try {
      codes[i] = run_one(args[i], specs[i], logs[i]);
    } catch (const dads::BlowupError& e) {
      std::lock_guard<std::mutex> lock(err_mutex);
      std::cerr << args[i] << ": " << e.what() << "\n";
      codes[i] = kBlowup;
    } catch (const dads::ConfigError& e) {
      std::lock_guard<std::mutex> lock(err_mutex);
      std::cerr << args[i] << ": " << e.what() << "\n";
      codes[i] = kConfig;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(err_mutex);
      std::cerr << args[i] << ": " << e.what() << "\n";
      codes[i] = kInternal;
    }
  };

  if (jobs <= 1 || args.size() <= 1) {
    for (std::size_t i = 0; i < args.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex next_mutex;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(next_mutex);
            if (next >= args.size()) return;
            i = next++;
          }
          work(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& log : logs) std::cout << log;
  for (int code : codes)
    if (code != kOk) return code;
  return kOk;
}

int cmd_presets() {
  for (const auto& name : dads::preset_names()) std::cout << name << "\n";
  return kOk;
}

int cmd_check_assumptions(const std::string& arg, double radius, int grid, int random_pts,
                          double tolerance) {
  const dads::ScenarioSpec spec = resolve_spec(arg);
  const dads::Scenario scenario = dads::build_scenario(spec);
  const auto a = dads::check_assumption_a(scenario.plant, scenario.clf, radius, grid,
                                          random_pts, spec.seed);
  const auto b = dads::check_assumption_b(scenario.plant, scenario.clf, radius, grid,
                                          random_pts, spec.seed);

  auto print = [&](const char* name, const dads::AssumptionReport& r) {
    std::cout << name << ": max_violation = " << dads::format_double(r.max_violation)
              << " over " << r.samples_checked << " samples (radius "
              << dads::format_double(radius) << ", seed " << r.seed << "), worst point =";
    for (double v : r.worst_point) std::cout << " " << dads::format_double(v);
    std::cout << "\n";
  };
  print("damping inequality", a);
  print("regressor bound", b);

  if (a.max_violation > tolerance || b.max_violation > tolerance) {
    std::cerr << "assumption check failed tolerance " << dads::format_double(tolerance)
              << "\n";
    return kCertificate;
  }
  return kOk;
}

int cmd_certify(const std::vector<std::string>& args, const Overrides& ov,
                double tolerance) {
  int worst = kOk;
  for (const auto& arg : args) {
    const dads::ScenarioSpec spec = resolve_spec(arg, ov, false);
    const dads::Scenario scenario = dads::build_scenario(spec);
    const dads::Trajectory traj = dads::integrate(scenario);

    dads::CertificateReport report;
    if (spec.kind == dads::ControllerConfig::Kind::Dads)
      report = dads::dads_certificate(scenario.plant, traj, scenario.clf,
                                      scenario.controller.dads, dads::b_floor(spec.b));
    else
      report = dads::c1_certificate(traj, scenario.controller.c1);

    std::cout << arg << ": max_violation = " << dads::format_double(report.max_violation)
              << " at t = " << dads::format_double(report.violation_time) << " ("
              << report.bound_descriptor << ")\n";
    if (report.max_violation > tolerance) {
      std::cerr << arg << ": certificate violated beyond tolerance "
                << dads::format_double(tolerance) << "\n";
      worst = kCertificate;
    }
  }
  return worst;
}

int cmd_refine(const std::string& arg, const Overrides& ov) {
  const dads::ScenarioSpec spec = resolve_spec(arg, ov, false);
  const dads::RefineReport report = dads::refine_check(dads::build_scenario(spec));
  std::cout << arg << ": dt = " << dads::format_double(report.dt)
            << ", dt-vs-dt/2 max state discrepancy = "
            << dads::format_double(report.discrepancy)
            << ", observed order = " << dads::format_double(report.observed_order) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deadzone-adapted disturbance suppression toolkit"};
  app.require_subcommand(1);

  Overrides ov;
  double opt_dt = 0, opt_horizon = 0, opt_seed = 0;
  std::string opt_out;
  int opt_stride = 0;
  int jobs = 1;

  auto add_overrides = [&](CLI::App* cmd, bool with_output) {
    cmd->add_option("--dt", opt_dt, "Override integration step");
    cmd->add_option("--horizon", opt_horizon, "Override simulation horizon (s)");
    cmd->add_option("--seed", opt_seed, "Override sampling seed");
    if (with_output) {
      cmd->add_option("--out", opt_out, "Override output directory (or set DADS_OUT_DIR)");
      cmd->add_option("--stride", opt_stride, "Override CSV downsample stride");
    }
  };

  auto collect_overrides = [&](CLI::App* cmd) {
    if (cmd->count("--dt")) ov.dt = opt_dt;
    if (cmd->count("--horizon")) ov.horizon = opt_horizon;
    if (cmd->count("--seed")) ov.seed = static_cast<std::uint64_t>(opt_seed);
    if (cmd->get_option_no_throw("--out") && cmd->count("--out")) ov.out_dir = opt_out;
    if (cmd->get_option_no_throw("--stride") && cmd->count("--stride"))
      ov.stride = opt_stride;
  };

  std::vector<std::string> run_args;
  auto* run = app.add_subcommand("run", "Integrate scenarios and emit CSV + summary");
  run->add_option("scenario", run_args, "Scenario file or preset name")->required();
  run->add_option("--jobs", jobs, "Run scenarios concurrently");
  add_overrides(run, true);

  app.add_subcommand("presets", "List built-in benchmark presets");

  std::string check_arg;
  double radius = 5.0, check_tol = 1e-9;
  int grid = 101, random_pts = 10000;
  auto* check = app.add_subcommand("check-assumptions",
                                   "Sample the bundle inequalities over a box");
  check->add_option("scenario", check_arg, "Scenario file or preset name")->required();
  check->add_option("--radius", radius, "Box half-width");
  check->add_option("--grid", grid, "Grid points per axis");
  check->add_option("--random", random_pts, "Random sample count");
  check->add_option("--tolerance", check_tol, "Pass threshold on max violation");

  std::vector<std::string> certify_args;
  double certify_tol = 1e-6;
  auto* certify = app.add_subcommand("certify", "Check Lyapunov certificates along runs");
  certify->add_option("scenario", certify_args, "Scenario file or preset name")->required();
  certify->add_option("--tolerance", certify_tol, "Pass threshold on max violation");
  add_overrides(certify, false);

  std::string refine_arg;
  auto* refine = app.add_subcommand("refine", "Step-size self-convergence report");
  refine->add_option("scenario", refine_arg, "Scenario file or preset name")->required();
  add_overrides(refine, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      collect_overrides(run);
      return cmd_run(run_args, ov, jobs);
    }
    if (app.get_subcommand("presets")->parsed()) return cmd_presets();
    if (check->parsed())
      return cmd_check_assumptions(check_arg, radius, grid, random_pts, check_tol);
    if (certify->parsed()) {
      collect_overrides(certify);
      return cmd_certify(certify_args, ov, certify_tol);
    }
    if (refine->parsed()) {
      collect_overrides(refine);
      return cmd_refine(refine_arg, ov);
    }
  } catch (const dads::BlowupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBlowup;
  } catch (const dads::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const dads::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
