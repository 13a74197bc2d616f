#include "dads/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "dads/errors.hpp"

namespace dads {

Vec Trajectory::state_at(std::size_t k) const {
  Vec x;
  x.reserve(n + (controller_kind == ControllerConfig::Kind::SigmaMod ? 3 : 1));
  for (int j = 0; j < n; ++j) x.push_back(y[j][k]);
  if (controller_kind == ControllerConfig::Kind::SigmaMod) {
    x.push_back(thetahat[0][k]);
    x.push_back(thetahat[1][k]);
  }
  x.push_back(rho[k]);
  return x;
}

Vec rk4_step(const OdeRhs& rhs, double t, const Vec& x, double dt) {
  if (!(dt > 0.0)) throw ConfigError("rk4_step: dt must be positive");
  const std::size_t n = x.size();

  auto eval = [&](double ts, const Vec& xs) {
    Vec k = rhs(ts, xs);
    if (k.size() != n)
      throw ConfigError("rk4_step: rhs returned size " + std::to_string(k.size()) +
                        ", expected " + std::to_string(n));
    if (!all_finite(k))
      throw SimulationError("rk4_step: non-finite rhs at t = " + std::to_string(ts), ts);
    return k;
  };

  const Vec k1 = eval(t, x);
  Vec xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x[i] + 0.5 * dt * k1[i];
  const Vec k2 = eval(t + 0.5 * dt, xs);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x[i] + 0.5 * dt * k2[i];
  const Vec k3 = eval(t + 0.5 * dt, xs);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x[i] + dt * k3[i];
  const Vec k4 = eval(t + dt, xs);

  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

namespace {

void validate(const Scenario& sc) {
  if (!(sc.horizon > 0.0)) throw ConfigError("scenario: horizon must be positive");
  if (!(sc.dt > 0.0)) throw ConfigError("scenario: dt must be positive");
  if (sc.dt > sc.horizon) throw ConfigError("scenario: dt must not exceed horizon");
  if (!(sc.blowup_threshold > 0.0))
    throw ConfigError("scenario: blowup_threshold must be positive");
  if (static_cast<int>(sc.y0.size()) != sc.plant.n)
    throw ConfigError("scenario: y0 has size " + std::to_string(sc.y0.size()) +
                      ", plant expects " + std::to_string(sc.plant.n));
  if (sc.disturbance.d.dim() != sc.plant.q)
    throw ConfigError("scenario: disturbance d must have dimension " +
                      std::to_string(sc.plant.q));
  if (sc.disturbance.theta.dim() != sc.plant.p)
    throw ConfigError("scenario: disturbance theta must have dimension " +
                      std::to_string(sc.plant.p));
  if (sc.disturbance.b.dim() != sc.plant.m)
    throw ConfigError("scenario: disturbance b must have dimension " +
                      std::to_string(sc.plant.m));
  if (sc.controller.kind == ControllerConfig::Kind::Dads) {
    validate_dads(sc.controller.dads, sc.clf);
    if (!(sc.rho0 > sc.controller.dads.kappa))
      throw ConfigError("scenario: requires rho0 > kappa");
  } else {
    if (!(sc.controller.c1.gamma > 0.0)) throw ConfigError("scenario: gamma must be positive");
    if (sc.controller.c1.sigma_bar < 0.0)
      throw ConfigError("scenario: sigma_bar must be nonnegative");
    if (!(sc.controller.c1.c > 0.0)) throw ConfigError("scenario: c must be positive");
    if (sc.thetahat0.size() != 2)
      throw ConfigError("scenario: thetahat0 must have dimension 2");
  }
}

}  // namespace

Trajectory integrate(const Scenario& sc) {
  validate(sc);
  const bool is_dads = sc.controller.kind == ControllerConfig::Kind::Dads;
  const int n = sc.plant.n;

  // Combined state: [y; rho] for the adaptive gain controller,
  // [y; th1; th2; rho] for the sigma-mod baseline.
  Vec x = sc.y0;
  if (!is_dads) {
    x.push_back(sc.thetahat0[0]);
    x.push_back(sc.thetahat0[1]);
  }
  x.push_back(sc.rho0);
  const std::size_t dim = x.size();

  OdeRhs rhs;
  if (is_dads) {
    rhs = [&sc, n](double t, const Vec& xs) {
      const Vec y(xs.begin(), xs.begin() + n);
      const double rho = xs[n];
      const Vec u = dads_control(sc.plant, sc.clf, sc.controller.dads, y, rho);
      Vec dy = plant_rhs(sc.plant, y, u, sc.disturbance.theta.eval(t),
                         sc.disturbance.d.eval(t), sc.disturbance.b.eval(t));
      dy.push_back(adaptation_rate(sc.clf, sc.controller.dads, y, rho));
      return dy;
    };
  } else {
    rhs = [&sc, n](double t, const Vec& xs) {
      const Vec y(xs.begin(), xs.begin() + n);
      const SigmaModState st{xs[n], xs[n + 1], xs[n + 2]};
      const Vec u{c1_control(sc.controller.c1, y, st)};
      Vec dy = plant_rhs(sc.plant, y, u, sc.disturbance.theta.eval(t),
                         sc.disturbance.d.eval(t), sc.disturbance.b.eval(t));
      const auto upd = c1_update(sc.controller.c1, y, st);
      dy.insert(dy.end(), upd.begin(), upd.end());
      return dy;
    };
  }

  // floor with a small slack so horizons that are integer multiples of dt
  // up to roundoff get the full step count.
  const auto steps = static_cast<std::size_t>(std::floor(sc.horizon / sc.dt + 1e-9));
  const std::size_t samples = steps + 1;

  Trajectory traj;
  traj.controller_kind = sc.controller.kind;
  traj.n = n;
  traj.m = sc.plant.m;
  traj.p = sc.plant.p;
  traj.q = sc.plant.q;
  traj.dt = sc.dt;
  traj.kappa = is_dads ? sc.controller.dads.kappa : 0.0;
  traj.t.reserve(samples);
  traj.y.assign(n, {});
  traj.u.assign(sc.plant.m, {});
  traj.d.assign(sc.plant.q, {});
  traj.theta.assign(sc.plant.p, {});
  traj.b.assign(sc.plant.m, {});
  if (!is_dads) traj.thetahat.assign(2, {});
  for (auto& col : traj.y) col.reserve(samples);
  for (auto& col : traj.u) col.reserve(samples);
  for (auto& col : traj.d) col.reserve(samples);
  for (auto& col : traj.theta) col.reserve(samples);
  for (auto& col : traj.b) col.reserve(samples);
  for (auto& col : traj.thetahat) col.reserve(samples);
  traj.rho.reserve(samples);
  traj.V.reserve(samples);
  traj.rho_dot.reserve(samples);

  auto record = [&](std::size_t k) {
    const double t = k * sc.dt;
    const Vec y(x.begin(), x.begin() + n);
    Vec u;
    double rho, rho_dot;
    if (is_dads) {
      rho = x[n];
      u = dads_control(sc.plant, sc.clf, sc.controller.dads, y, rho);
      rho_dot = adaptation_rate(sc.clf, sc.controller.dads, y, rho);
    } else {
      const SigmaModState st{x[n], x[n + 1], x[n + 2]};
      rho = st.rho;
      u = {c1_control(sc.controller.c1, y, st)};
      rho_dot = c1_update(sc.controller.c1, y, st)[2];
      traj.thetahat[0].push_back(st.th1);
      traj.thetahat[1].push_back(st.th2);
    }
    if (!all_finite(u))
      throw SimulationError("integrate: non-finite control at t = " + std::to_string(t), t);

    traj.t.push_back(t);
    for (int j = 0; j < n; ++j) traj.y[j].push_back(y[j]);
    traj.rho.push_back(rho);
    for (int j = 0; j < traj.m; ++j) traj.u[j].push_back(u[j]);
    traj.V.push_back(sc.clf.V(y));
    traj.rho_dot.push_back(rho_dot);
    const Vec dv = sc.disturbance.d.eval(t);
    const Vec tv = sc.disturbance.theta.eval(t);
    const Vec bv = sc.disturbance.b.eval(t);
    for (int j = 0; j < traj.q; ++j) traj.d[j].push_back(dv[j]);
    for (int j = 0; j < traj.p; ++j) traj.theta[j].push_back(tv[j]);
    for (int j = 0; j < traj.m; ++j) traj.b[j].push_back(bv[j]);
  };

  record(0);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = k * sc.dt;
    Vec next = rk4_step(rhs, t, x, sc.dt);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!std::isfinite(next[i]) || std::abs(next[i]) > sc.blowup_threshold)
        throw BlowupError("integrate: state exceeded blowup threshold after t = " +
                              std::to_string(t),
                          t, x);
    }
    x = std::move(next);
    record(k + 1);
  }
  return traj;
}

RefineReport refine_check(const Scenario& scenario,
                          const std::function<double(const Vec&)>& norm) {
  auto gap = [&](const Vec& a, const Vec& b) {
    Vec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    if (norm) return norm(diff);
    double mx = 0.0;
    for (double v : diff) mx = std::max(mx, std::abs(v));
    return mx;
  };

  const Trajectory coarse = integrate(scenario);
  Scenario half = scenario;
  half.dt = scenario.dt / 2.0;
  const Trajectory fine = integrate(half);
  Scenario quarter = scenario;
  quarter.dt = scenario.dt / 4.0;
  const Trajectory finest = integrate(quarter);

  double d1 = 0.0, d2 = 0.0;
  for (std::size_t k = 0; k < coarse.samples(); ++k) {
    d1 = std::max(d1, gap(coarse.state_at(k), fine.state_at(2 * k)));
    d2 = std::max(d2, gap(fine.state_at(2 * k), finest.state_at(4 * k)));
  }

  RefineReport report;
  report.dt = scenario.dt;
  report.discrepancy = d1;
  report.observed_order =
      d2 > 0.0 ? std::log2(d1 / d2) : std::numeric_limits<double>::quiet_NaN();
  return report;
}

}  // namespace dads
