#pragma once

// Comparison controller for the double integrator: certainty-equivalence
// adaptive feedback with sigma-modification leakage. sigma_bar = 0 gives the
// no-leakage nominal controller. Unlike the deadzone scheme, the estimates
// can drift under persistent disturbances (sigma_bar = 0) or trade drift for
// a residual error (sigma_bar > 0).

#include <array>

#include "dads/report.hpp"
#include "dads/vec.hpp"

namespace dads {

struct Trajectory;  // sim.hpp

struct SigmaModParams {
  double sigma_bar = 0.0;  ///< leakage coefficient, >= 0
  double gamma = 0.0;      ///< adaptation rate, > 0
  double c = 0.0;          ///< CLF slope, > 0

  bool operator==(const SigmaModParams&) const = default;
};

struct SigmaModState {
  double th1 = 0.0, th2 = 0.0;  ///< parameter estimates
  double rho = 0.0;             ///< input-coefficient estimate state
};

double c1_control(const SigmaModParams& params, const Vec& y, const SigmaModState& st);

/// Time derivatives (th1dot, th2dot, rhodot) of the controller state.
std::array<double, 3> c1_update(const SigmaModParams& params, const Vec& y,
                                const SigmaModState& st);

/// Verifies the controller's Lyapunov differential inequality along a
/// simulated trajectory using the analytic derivative of the composite
/// Lyapunov function (built from the true theta and b recorded in the
/// trajectory, which must be constant in time).
CertificateReport c1_certificate(const Trajectory& traj, const SigmaModParams& params);

}  // namespace dads
