#include "dads/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dads/errors.hpp"
#include "dads/sim.hpp"

namespace dads {

double c1_control(const SigmaModParams& params, const Vec& y, const SigmaModState& st) {
  const double c = params.c;
  const double w = y[1] + c * y[0];
  return -st.rho * (y[0] + c * y[1]) - c * st.rho * w -
         st.rho * (st.th1 * y[0] + st.th2 * y[1]);
}

std::array<double, 3> c1_update(const SigmaModParams& params, const Vec& y,
                                const SigmaModState& st) {
  const double c = params.c;
  const double g = params.gamma;
  const double w = y[1] + c * y[0];
  const double th1dot = g * y[0] * w - g * params.sigma_bar * st.th1;
  const double th2dot = g * y[1] * w - g * params.sigma_bar * st.th2;
  const double rhodot =
      g * w * ((1.0 + c * c + st.th1) * y[0] + (2.0 * c + st.th2) * y[1]) -
      g * params.sigma_bar * st.rho;
  return {th1dot, th2dot, rhodot};
}

CertificateReport c1_certificate(const Trajectory& traj, const SigmaModParams& params) {
  if (traj.controller_kind != ControllerConfig::Kind::SigmaMod)
    throw ConfigError("c1_certificate: trajectory was not produced by the sigma-mod controller");
  if (traj.n != 2 || traj.m != 1 || traj.p != 2 || traj.q != 1)
    throw ConfigError("c1_certificate: controller is defined for the double integrator only");

  // The composite Lyapunov function needs constant true theta and b.
  for (int j = 0; j < traj.p; ++j)
    for (double v : traj.theta[j])
      if (v != traj.theta[j][0])
        throw ConfigError("c1_certificate: time-varying theta is not covered by the bound");
  for (double v : traj.b[0])
    if (v != traj.b[0][0])
      throw ConfigError("c1_certificate: time-varying b is not covered by the bound");

  const double th1 = traj.theta[0][0];
  const double th2 = traj.theta[1][0];
  const double b = traj.b[0][0];
  const double c = params.c;
  const double g = params.gamma;
  const double sb = params.sigma_bar;

  CertificateReport report;
  report.samples_checked = traj.samples();
  report.bound_descriptor =
      sb == 0.0 ? "Vdot <= -c*y1^2 - (c/2)*w^2 + d^2/(2c)"
                : "Vdot <= -min(c, sigma_bar*gamma)*V + d^2/(2c) "
                  "+ (sigma_bar/2)*(theta1^2 + theta2^2 + 1/b)";

  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < traj.samples(); ++k) {
    const Vec y{traj.y[0][k], traj.y[1][k]};
    const SigmaModState st{traj.thetahat[0][k], traj.thetahat[1][k], traj.rho[k]};
    const double u = traj.u[0][k];
    const double d = traj.d[0][k];
    const double w = y[1] + c * y[0];

    const double y1dot = y[1];
    const double y2dot = th1 * y[0] + th2 * y[1] + b * u + d;
    const auto upd = c1_update(params, y, st);

    const double vdot = y[0] * y1dot + w * (y2dot + c * y1dot) +
                        (st.th1 - th1) * upd[0] / g + (st.th2 - th2) * upd[1] / g +
                        b * (st.rho - 1.0 / b) * upd[2] / g;

    double bound;
    if (sb == 0.0) {
      bound = -c * y[0] * y[0] - 0.5 * c * w * w + d * d / (2.0 * c);
    } else {
      const double vc = 0.5 * y[0] * y[0] + 0.5 * w * w +
                        0.5 * (st.th1 - th1) * (st.th1 - th1) / g +
                        0.5 * (st.th2 - th2) * (st.th2 - th2) / g +
                        0.5 * b * (st.rho - 1.0 / b) * (st.rho - 1.0 / b) / g;
      bound = -std::min(c, sb * g) * vc + d * d / (2.0 * c) +
              0.5 * sb * (th1 * th1 + th2 * th2 + 1.0 / b);
    }

    const double gap = vdot - bound;
    if (gap > worst) {
      worst = gap;
      report.violation_time = traj.t[k];
    }
  }
  report.max_violation = pos(worst);
  return report;
}

}  // namespace dads
