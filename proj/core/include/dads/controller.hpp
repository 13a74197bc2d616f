#pragma once

// Deadzone-adapted disturbance suppression controller: dynamic nonlinear
// damping driven by a single adapted gain rho, frozen whenever V falls
// below the deadzone level.
//
//   u_i    = -r_i(y, rho) * gradV(y)*g_i(y)
//   rhodot = gamma * (V(y) - epsilon)^+          with rho = kappa + exp(z)
//
// Three gain laws are available. The full law works for any bundle and
// needs 2*damping*kappa >= 1; the simplified and matched laws require
// sigma = lambda = 0 (matched additionally requires phi_i = 0) and drop
// that restriction.

#include <cmath>

#include "dads/clf.hpp"
#include "dads/systems.hpp"
#include "dads/vec.hpp"

namespace dads {

enum class GainVariant { Full, Simplified, Matched };

struct DadsParams {
  double epsilon = 0.0;  ///< deadzone level, in Lyapunov units (> 0)
  double gamma = 0.0;    ///< adaptation rate (> 0)
  double damping = 0.0;  ///< damping constant (> 0)
  double kappa = 0.0;    ///< gain floor offset (> 0)
  GainVariant variant = GainVariant::Simplified;

  bool operator==(const DadsParams&) const = default;
};

struct DadsState {
  double rho = 0.0;  ///< adapted gain, > kappa, non-decreasing along trajectories
  double z(double kappa) const { return std::log(rho - kappa); }
};

/// Checks the parameter/bundle preconditions of the configured variant.
void validate_dads(const DadsParams& params, const ClfBundle& clf);

Vec gain_full(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
              const Vec& y, double rho);
Vec gain_simplified(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                    const Vec& y, double rho);
Vec gain_matched(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                 const Vec& y, double rho);

/// Gains of the configured variant. All entries are nonnegative and
/// nondecreasing in rho.
Vec dads_gains(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
               const Vec& y, double rho);

/// Control law u_i = -r_i * gradV*g_i.
Vec dads_control(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                 const Vec& y, double rho);

/// Gain adaptation rate gamma*(V(y) - epsilon)^+; exactly zero inside the
/// deadzone V <= epsilon.
double adaptation_rate(const ClfBundle& clf, const DadsParams& params, const Vec& y,
                       double rho);

/// Worst-case residual forcing level given a disturbance bound, a parameter
/// bound, a positive lower bound on the input coefficients and the adapted
/// gain level above kappa. Zero exactly when the adapted gain dominates both
/// the parameter bound and the reciprocal coefficient bound (and the bundle
/// has sigma = lambda = 0, d = 0).
double disturbance_level(double d_bound, double theta_bound, double b_floor,
                         double gain_level, int channels, double sigma, double lambda,
                         double damping, double kappa);

}  // namespace dads
