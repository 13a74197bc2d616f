#pragma once

// Control-affine plants with matched uncertainty, and the closed-form
// time signals used to drive them.

#include <cstddef>
#include <functional>
#include <vector>

#include "dads/vec.hpp"

namespace dads {

/// Plant of the form
///   ydot = f(y) + sum_i g_i(y) * (b_i u_i + phi_i(y)'theta + dist_i(y)'d)
/// with f(0) = 0 and phi_i(0) = 0. All evaluators must be pure.
struct PlantModel {
  int n = 0;  ///< state dimension
  int m = 0;  ///< input dimension
  int p = 0;  ///< parameter dimension
  int q = 0;  ///< disturbance dimension
  std::function<Vec(const Vec&)> f;               ///< drift, n -> n
  std::vector<std::function<Vec(const Vec&)>> g;  ///< input channels, n -> n
  std::vector<std::function<Vec(const Vec&)>> phi;   ///< matched regressors, n -> p
  std::vector<std::function<Vec(const Vec&)>> dist;  ///< disturbance channels, n -> q
};

/// Closed-form scalar signal of time. Tagged descriptors keep scenarios
/// serializable and evaluation deterministic.
struct Signal {
  enum class Kind { Zero, Constant, Sinusoid, Steps };

  Kind kind = Kind::Zero;
  double value = 0.0;                          // Constant
  double amplitude = 0.0, omega = 0.0, phase = 0.0;  // amplitude*sin(omega*t + phase)
  std::vector<double> step_times;              // Steps: value i on [t_i, t_{i+1})
  std::vector<double> step_values;

  static Signal zero();
  static Signal constant(double v);
  static Signal sinusoid(double amplitude, double omega, double phase);
  static Signal steps(std::vector<double> times, std::vector<double> values);

  double eval(double t) const;  ///< throws DomainError for t < 0
  double inf_value() const;     ///< infimum over t >= 0
  bool is_constant() const { return kind == Kind::Zero || kind == Kind::Constant; }

  bool operator==(const Signal&) const = default;
};

struct VectorSignal {
  std::vector<Signal> comp;

  int dim() const { return static_cast<int>(comp.size()); }
  Vec eval(double t) const;

  bool operator==(const VectorSignal&) const = default;
};

/// Time courses of the unknown inputs: disturbance d, parameters theta and
/// input coefficients b. Every b component must stay positive.
struct DisturbanceProfile {
  VectorSignal d, theta, b;

  bool operator==(const DisturbanceProfile&) const = default;
};

/// Evaluates the plant right-hand side. Dimension mismatches raise
/// ConfigError, non-positive b raises DomainError and non-finite evaluator
/// output raises ModelError.
Vec plant_rhs(const PlantModel& plant, const Vec& y, const Vec& u, const Vec& theta,
              const Vec& d, const Vec& b);

/// The uncertain double integrator: ydot1 = y2, ydot2 = theta1*y1 + theta2*y2 + b*u + d.
PlantModel double_integrator_plant();

}  // namespace dads
