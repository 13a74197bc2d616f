#include "dads/systems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dads/errors.hpp"

namespace dads {

namespace {

void require_dim(const Vec& v, int expected, const char* name) {
  if (static_cast<int>(v.size()) != expected)
    throw ConfigError(std::string("plant_rhs: ") + name + " has size " +
                      std::to_string(v.size()) + ", expected " + std::to_string(expected));
}

}  // namespace

Vec plant_rhs(const PlantModel& plant, const Vec& y, const Vec& u, const Vec& theta,
              const Vec& d, const Vec& b) {
  require_dim(y, plant.n, "y");
  require_dim(u, plant.m, "u");
  require_dim(theta, plant.p, "theta");
  require_dim(d, plant.q, "d");
  require_dim(b, plant.m, "b");
  for (int i = 0; i < plant.m; ++i)
    if (!(b[i] > 0.0))
      throw DomainError("plant_rhs: input coefficient b[" + std::to_string(i) +
                        "] must be positive, got " + std::to_string(b[i]));

  Vec dy = plant.f(y);
  require_dim(dy, plant.n, "f(y)");
  for (int i = 0; i < plant.m; ++i) {
    const Vec phi_i = plant.phi[i](y);
    const Vec dist_i = plant.dist[i](y);
    require_dim(phi_i, plant.p, "phi_i(y)");
    require_dim(dist_i, plant.q, "dist_i(y)");
    const double channel = b[i] * u[i] + dot(phi_i, theta) + dot(dist_i, d);
    const Vec g_i = plant.g[i](y);
    require_dim(g_i, plant.n, "g_i(y)");
    for (int j = 0; j < plant.n; ++j) dy[j] += g_i[j] * channel;
  }
  if (!all_finite(dy)) throw ModelError("plant_rhs: model evaluator produced a non-finite value");
  return dy;
}

PlantModel double_integrator_plant() {
  PlantModel mdl;
  mdl.n = 2;
  mdl.m = 1;
  mdl.p = 2;
  mdl.q = 1;
  mdl.f = [](const Vec& y) { return Vec{y[1], 0.0}; };
  mdl.g = {[](const Vec&) { return Vec{0.0, 1.0}; }};
  mdl.phi = {[](const Vec& y) { return Vec{y[0], y[1]}; }};
  mdl.dist = {[](const Vec&) { return Vec{1.0}; }};
  return mdl;
}

Signal Signal::zero() { return Signal{}; }

Signal Signal::constant(double v) {
  Signal s;
  s.kind = Kind::Constant;
  s.value = v;
  return s;
}

Signal Signal::sinusoid(double amplitude, double omega, double phase) {
  Signal s;
  s.kind = Kind::Sinusoid;
  s.amplitude = amplitude;
  s.omega = omega;
  s.phase = phase;
  return s;
}

Signal Signal::steps(std::vector<double> times, std::vector<double> values) {
  if (times.empty() || times.size() != values.size())
    throw ConfigError("steps signal needs matching, non-empty time/value lists");
  if (times.front() != 0.0) throw ConfigError("steps signal must start at t = 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw ConfigError("steps signal times must be increasing");
  Signal s;
  s.kind = Kind::Steps;
  s.step_times = std::move(times);
  s.step_values = std::move(values);
  return s;
}

double Signal::eval(double t) const {
  if (t < 0.0) throw DomainError("signal evaluated at negative time t = " + std::to_string(t));
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value;
    case Kind::Sinusoid:
      return amplitude * std::sin(omega * t + phase);
    case Kind::Steps: {
      // last knot whose time is <= t; the final value extends to infinity
      auto it = std::upper_bound(step_times.begin(), step_times.end(), t);
      return step_values[static_cast<std::size_t>(it - step_times.begin()) - 1];
    }
  }
  return 0.0;
}

double Signal::inf_value() const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value;
    case Kind::Sinusoid:
      return -std::abs(amplitude);
    case Kind::Steps:
      return *std::min_element(step_values.begin(), step_values.end());
  }
  return 0.0;
}

Vec VectorSignal::eval(double t) const {
  Vec out(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) out[i] = comp[i].eval(t);
  return out;
}

}  // namespace dads
