#include "dads/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dads/errors.hpp"

namespace dads {

CertificateReport dads_certificate(const PlantModel& plant, const Trajectory& traj,
                                   const ClfBundle& clf, const DadsParams& params,
                                   double b_floor) {
  if (traj.controller_kind != ControllerConfig::Kind::Dads)
    throw ConfigError("dads_certificate: trajectory was not produced by the dads controller");
  if (!(b_floor > 0.0)) throw DomainError("dads_certificate: b_floor must be positive");

  CertificateReport report;
  report.samples_checked = traj.samples();
  report.bound_descriptor = "Vdot <= -rate_lb(V) + residual level at recorded gain";

  Vec y(traj.n), u(traj.m), d(traj.q), th(traj.p), b(traj.m);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < traj.samples(); ++k) {
    for (int j = 0; j < traj.n; ++j) y[j] = traj.y[j][k];
    for (int j = 0; j < traj.m; ++j) u[j] = traj.u[j][k];
    for (int j = 0; j < traj.q; ++j) d[j] = traj.d[j][k];
    for (int j = 0; j < traj.p; ++j) th[j] = traj.theta[j][k];
    for (int j = 0; j < traj.m; ++j) b[j] = traj.b[j][k];
    const double rho = traj.rho[k];

    const double vdot = dot(clf.gradV(y), plant_rhs(plant, y, u, th, d, b));
    const double level =
        disturbance_level(norm(d), norm(th), b_floor, rho - params.kappa, traj.m,
                          clf.sigma, clf.lambda, params.damping, params.kappa);
    const double gap = vdot - (-clf.rate_lb(clf.V(y)) + level);
    if (gap > worst) {
      worst = gap;
      report.violation_time = traj.t[k];
    }
  }
  report.max_violation = pos(worst);
  return report;
}

TailStats tail_stats(const Trajectory& traj, double tail_fraction) {
  if (!(tail_fraction > 0.0) || !(tail_fraction < 1.0))
    throw DomainError("tail_stats: tail_fraction must lie in (0, 1)");
  const std::size_t last = traj.samples() - 1;
  const auto begin = static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * last));

  TailStats out;
  double sum = 0.0;
  for (std::size_t k = begin; k <= last; ++k) {
    out.max_V = std::max(out.max_V, traj.V[k]);
    sum += traj.V[k];
    double y2 = 0.0;
    for (int j = 0; j < traj.n; ++j) y2 += traj.y[j][k] * traj.y[j][k];
    out.max_y_norm = std::max(out.max_y_norm, std::sqrt(y2));
  }
  out.mean_V = sum / static_cast<double>(last - begin + 1);
  return out;
}

DeadzoneReport deadzone_check(const Trajectory& traj, double epsilon) {
  return deadzone_check(traj, epsilon, 0, traj.samples());
}

DeadzoneReport deadzone_check(const Trajectory& traj, double epsilon, std::size_t begin,
                              std::size_t end) {
  if (begin >= end || end > traj.samples())
    throw DomainError("deadzone_check: bad sample range");
  DeadzoneReport out;
  std::size_t active = 0;
  for (std::size_t k = begin; k < end; ++k) {
    if (traj.V[k] > epsilon)
      ++active;
    else
      out.max_rate_in_deadzone = std::max(out.max_rate_in_deadzone, std::abs(traj.rho_dot[k]));
  }
  out.activity_fraction = static_cast<double>(active) / static_cast<double>(end - begin);
  return out;
}

DriftReport drift_metric(const Trajectory& traj, double split) {
  if (!(split > 0.0) || !(split < 1.0))
    throw DomainError("drift_metric: split must lie in (0, 1)");
  const std::size_t last = traj.samples() - 1;
  const auto at = static_cast<std::size_t>(std::floor(split * last));
  DriftReport out;
  out.rho_end = traj.rho[last];
  out.late_increment = traj.rho[last] - traj.rho[at];
  return out;
}

RegulationVerdict regulation_dichotomy(const Trajectory& traj, double theta_tail,
                                       double b_tail, double kappa, double regulation_tol) {
  if (traj.controller_kind != ControllerConfig::Kind::Dads)
    throw ConfigError("regulation_dichotomy: applies to dads trajectories only");
  if (!(b_tail > 0.0)) throw DomainError("regulation_dichotomy: b_tail must be positive");

  RegulationVerdict out;
  const std::size_t last = traj.samples() - 1;
  double y2 = 0.0;
  for (int j = 0; j < traj.n; ++j) y2 += traj.y[j][last] * traj.y[j][last];
  out.final_y_norm = std::sqrt(y2);
  out.regulated = out.final_y_norm <= regulation_tol;

  out.cap = std::max(theta_tail, 1.0 / b_tail);
  out.gain_capped = out.cap > kappa;
  if (out.gain_capped)
    for (double r : traj.rho)
      if (!(r < out.cap)) {
        out.gain_capped = false;
        break;
      }
  out.holds = out.regulated || out.gain_capped;
  return out;
}

}  // namespace dads
