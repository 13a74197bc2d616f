#pragma once

// Closed-loop integration of plant + controller with a fixed-step RK4
// scheme. Fixed step keeps runs bit-reproducible; refine_check provides the
// accuracy guard that an adaptive scheme would.

#include <cstdint>
#include <functional>
#include <vector>

#include "dads/baseline.hpp"
#include "dads/clf.hpp"
#include "dads/controller.hpp"
#include "dads/systems.hpp"
#include "dads/vec.hpp"

namespace dads {

struct ControllerConfig {
  enum class Kind { Dads, SigmaMod };
  Kind kind = Kind::Dads;
  DadsParams dads;    // active when kind == Dads
  SigmaModParams c1;  // active when kind == SigmaMod

  bool operator==(const ControllerConfig&) const = default;
};

struct Scenario {
  PlantModel plant;
  ClfBundle clf;
  ControllerConfig controller;
  Vec y0;
  double rho0 = 0.0;  ///< initial adapted gain (Dads: must exceed kappa)
  Vec thetahat0;      ///< initial parameter estimates (SigmaMod only)
  DisturbanceProfile disturbance;
  double horizon = 0.0;
  double dt = 0.0;
  double blowup_threshold = 1e8;
  std::uint64_t seed = 1;
};

/// Uniformly sampled record of a closed-loop run. Column-major storage:
/// y[j][k] is component j at sample k. All recorded values are finite.
struct Trajectory {
  ControllerConfig::Kind controller_kind = ControllerConfig::Kind::Dads;
  int n = 0, m = 0, p = 0, q = 0;
  double dt = 0.0;
  double kappa = 0.0;  ///< gain floor (Dads), for deriving z = ln(rho - kappa)

  std::vector<double> t;
  std::vector<Vec> y;         // n columns
  std::vector<double> rho;    // adapted gain (Dads) or coefficient estimate (SigmaMod)
  std::vector<Vec> thetahat;  // 2 columns for SigmaMod, empty for Dads
  std::vector<Vec> u;         // m columns
  std::vector<double> V;      // clf.V along the plant state
  std::vector<double> rho_dot;
  std::vector<Vec> d, theta, b;  // q, p, m columns

  std::size_t samples() const { return t.size(); }
  Vec state_at(std::size_t k) const;  ///< combined [y; controller state]
};

using OdeRhs = std::function<Vec(double, const Vec&)>;

/// One classical 4-stage Runge-Kutta step. The right-hand side is evaluated
/// at stage times t, t + dt/2, t + dt/2, t + dt; a non-finite evaluation
/// raises SimulationError carrying the stage time.
Vec rk4_step(const OdeRhs& rhs, double t, const Vec& x, double dt);

/// Integrates the closed loop over [0, horizon] with floor(horizon/dt) + 1
/// samples. Deterministic: identical scenarios produce bit-identical
/// trajectories. Raises BlowupError (with last valid time and state) when
/// any state component exceeds the blowup threshold.
Trajectory integrate(const Scenario& scenario);

struct RefineReport {
  double discrepancy = 0.0;     ///< max state gap between dt and dt/2 runs
  double observed_order = 0.0;  ///< from the dt, dt/2, dt/4 triple (NaN if exact)
  double dt = 0.0;
};

/// Self-convergence check: integrates at dt, dt/2 and dt/4 and compares
/// states at the coarse sample times under the given norm (default: max-abs
/// over components).
RefineReport refine_check(const Scenario& scenario,
                          const std::function<double(const Vec&)>& norm = {});

}  // namespace dads
