#pragma once

// Lyapunov design data for the controller synthesis, plus sampling-based
// verification of the two inequalities the design relies on:
//
//   (damping)    gradV*f <= -Q + sigma*sum_i delta_i*gradV*g_i
//                              + sum_i s_i*(gradV*g_i)^2
//   (regressor)  sum_i |phi_i|^2 <= mu * (Q + lambda)
//
// The checks certify a bounded box only; the report records the region.

#include <cstdint>
#include <functional>
#include <vector>

#include "dads/systems.hpp"
#include "dads/vec.hpp"

namespace dads {

struct ClfBundle {
  std::function<double(const Vec&)> V;      ///< positive definite, radially unbounded
  std::function<Vec(const Vec&)> gradV;
  std::function<double(const Vec&)> Q;      ///< decrease function, positive definite
  std::vector<std::function<double(const Vec&)>> s;      ///< damping weights, >= 0
  std::vector<std::function<double(const Vec&)>> delta;  ///< feedback offsets
  std::function<double(const Vec&)> mu;     ///< regressor growth bound, > 0
  double sigma = 0.0;
  double lambda = 0.0;
  /// Class-Kinf decrease-rate lower bound: Q(y) >= 2*rate_lb(V(y)).
  std::function<double(double)> rate_lb;
};

struct AssumptionReport {
  double max_violation = 0.0;  ///< max over samples of (lhs - rhs)^+
  Vec worst_point;             ///< sample attaining the largest lhs - rhs
  std::size_t samples_checked = 0;
  std::uint64_t seed = 0;      ///< seed of the random half of the sample set
};

/// Bundle for the double integrator: V = y1^2/2 + (y2 + c*y1)^2/2, Q = c*V,
/// constant damping weight and regressor bound, sigma = lambda = 0.
ClfBundle double_integrator_clf(double c);

/// Bundle built from a known stabilizing feedback u_i = k_i(y) whose
/// closed loop satisfies gradV*(f + sum_i g_i k_i) <= -V. Yields s_i = 0,
/// sigma = -1, delta_i = k_i, Q = V and mu = lambda + |phi|^2/(V + lambda).
ClfBundle bundle_from_stabilizer(std::function<double(const Vec&)> V,
                                 std::function<Vec(const Vec&)> gradV,
                                 std::vector<std::function<double(const Vec&)>> k,
                                 std::vector<std::function<Vec(const Vec&)>> phi,
                                 double lambda);

/// Samples the damping inequality over a grid plus uniform random points in
/// [-box_radius, box_radius]^n. A positive max_violation is data, not an error.
AssumptionReport check_assumption_a(const PlantModel& plant, const ClfBundle& clf,
                                    double box_radius, int grid_pts, int random_pts,
                                    std::uint64_t seed = 1);

/// Same sampling for the regressor-growth inequality.
AssumptionReport check_assumption_b(const PlantModel& plant, const ClfBundle& clf,
                                    double box_radius, int grid_pts, int random_pts,
                                    std::uint64_t seed = 1);

}  // namespace dads
