#pragma once

// Post-hoc verification passes over simulated trajectories: the pointwise
// Lyapunov-derivative certificate of the adaptive controller, residual-set
// statistics, deadzone and gain-drift diagnostics, and the exact-regulation
// dichotomy for the vanishing-disturbance case.

#include <cstddef>

#include "dads/clf.hpp"
#include "dads/controller.hpp"
#include "dads/report.hpp"
#include "dads/sim.hpp"
#include "dads/systems.hpp"

namespace dads {

/// Checks, at every sample, the analytic derivative of V along the closed
/// loop against -rate_lb(V) plus the pointwise residual forcing level at the
/// recorded gain. b_floor must be the positive infimum of the b signal over
/// the run (min over channels).
CertificateReport dads_certificate(const PlantModel& plant, const Trajectory& traj,
                                   const ClfBundle& clf, const DadsParams& params,
                                   double b_floor);

struct TailStats {
  double max_V = 0.0;
  double max_y_norm = 0.0;
  double mean_V = 0.0;
};

/// Statistics over the final tail_fraction of the samples.
TailStats tail_stats(const Trajectory& traj, double tail_fraction);

struct DeadzoneReport {
  double activity_fraction = 0.0;     ///< fraction of samples with V > epsilon
  double max_rate_in_deadzone = 0.0;  ///< max recorded |rhodot| where V <= epsilon
};

DeadzoneReport deadzone_check(const Trajectory& traj, double epsilon);
/// Same check restricted to samples [begin, end).
DeadzoneReport deadzone_check(const Trajectory& traj, double epsilon, std::size_t begin,
                              std::size_t end);

struct DriftReport {
  double rho_end = 0.0;
  double late_increment = 0.0;  ///< rho(T) - rho(split*T)
};

DriftReport drift_metric(const Trajectory& traj, double split);

struct RegulationVerdict {
  bool regulated = false;   ///< |y(T)| <= regulation_tol
  bool gain_capped = false; ///< cap > kappa and rho(t) < cap at every sample
  bool holds = false;       ///< at least one branch
  double final_y_norm = 0.0;
  double cap = 0.0;         ///< max(theta_tail, 1/b_tail)
};

/// Dichotomy for runs with vanishing disturbance and a sigma = lambda = 0
/// bundle: either the state is regulated to (near) zero, or the adapted
/// gain stays strictly below max(theta_tail, 1/b_tail).
RegulationVerdict regulation_dichotomy(const Trajectory& traj, double theta_tail,
                                       double b_tail, double kappa,
                                       double regulation_tol = 1e-3);

}  // namespace dads
