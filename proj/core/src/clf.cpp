#include "dads/clf.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "dads/errors.hpp"

namespace dads {

ClfBundle double_integrator_clf(double c) {
  if (!(c > 0.0)) throw DomainError("double_integrator_clf: c must be positive");
  const double s_const = ((1.0 - c * c) * (1.0 - c * c) + 3.0 * c * c) / (2.0 * c);
  const double root = std::sqrt(c * c + 4.0);
  const double mu_const = 2.0 * (root + c) / (c * root - c * c);

  ClfBundle clf;
  clf.V = [c](const Vec& y) {
    const double w = y[1] + c * y[0];
    return 0.5 * y[0] * y[0] + 0.5 * w * w;
  };
  clf.gradV = [c](const Vec& y) {
    const double w = y[1] + c * y[0];
    return Vec{y[0] + c * w, w};
  };
  clf.Q = [c, V = clf.V](const Vec& y) { return c * V(y); };
  clf.s = {[s_const](const Vec&) { return s_const; }};
  clf.delta = {[](const Vec&) { return 0.0; }};
  clf.mu = [mu_const](const Vec&) { return mu_const; };
  clf.sigma = 0.0;
  clf.lambda = 0.0;
  clf.rate_lb = [c](double v) { return 0.5 * c * v; };
  return clf;
}

ClfBundle bundle_from_stabilizer(std::function<double(const Vec&)> V,
                                 std::function<Vec(const Vec&)> gradV,
                                 std::vector<std::function<double(const Vec&)>> k,
                                 std::vector<std::function<Vec(const Vec&)>> phi,
                                 double lambda) {
  if (!(lambda > 0.0)) throw DomainError("bundle_from_stabilizer: lambda must be positive");
  ClfBundle clf;
  clf.Q = V;
  clf.V = V;
  clf.gradV = std::move(gradV);
  clf.s.assign(k.size(), [](const Vec&) { return 0.0; });
  clf.delta = std::move(k);
  clf.sigma = -1.0;
  clf.lambda = lambda;
  clf.mu = [V, phi, lambda](const Vec& y) {
    double ss = 0.0;
    for (const auto& p : phi) ss += norm_sq(p(y));
    return lambda + ss / (V(y) + lambda);
  };
  clf.rate_lb = [](double v) { return 0.5 * v; };
  return clf;
}

namespace {

// Visits a full grid (grid_pts per axis) plus uniform random points in the
// box. The random stream is a fixed bit mapping so reports reproduce
// bit-identically across platforms for a given seed.
template <typename Fn>
std::size_t sample_box(int n, double radius, int grid_pts, int random_pts,
                       std::uint64_t seed, Fn&& visit) {
  std::size_t count = 0;
  Vec y(n, 0.0);

  std::vector<int> idx(n, 0);
  for (;;) {
    for (int a = 0; a < n; ++a)
      y[a] = grid_pts == 1 ? 0.0 : -radius + 2.0 * radius * idx[a] / (grid_pts - 1);
    visit(y);
    ++count;
    int axis = 0;
    while (axis < n && ++idx[axis] == grid_pts) idx[axis++] = 0;
    if (axis == n) break;
  }

  std::mt19937_64 rng(seed);
  for (int r = 0; r < random_pts; ++r) {
    for (int a = 0; a < n; ++a) {
      const double u = (rng() >> 11) * 0x1.0p-53;  // uniform in [0, 1)
      y[a] = radius * (2.0 * u - 1.0);
    }
    visit(y);
    ++count;
  }
  return count;
}

template <typename ValueFn>
AssumptionReport run_check(const PlantModel& plant, double box_radius, int grid_pts,
                           int random_pts, std::uint64_t seed, ValueFn&& value) {
  if (!(box_radius > 0.0)) throw DomainError("assumption check: box_radius must be positive");
  if (grid_pts < 1) throw DomainError("assumption check: grid_pts must be >= 1");
  if (random_pts < 0) throw DomainError("assumption check: random_pts must be >= 0");

  AssumptionReport report;
  report.seed = seed;
  double worst = -std::numeric_limits<double>::infinity();
  report.samples_checked =
      sample_box(plant.n, box_radius, grid_pts, random_pts, seed, [&](const Vec& y) {
        const double v = value(y);
        if (v > worst) {
          worst = v;
          report.worst_point = y;
        }
      });
  report.max_violation = pos(worst);
  return report;
}

}  // namespace

AssumptionReport check_assumption_a(const PlantModel& plant, const ClfBundle& clf,
                                    double box_radius, int grid_pts, int random_pts,
                                    std::uint64_t seed) {
  return run_check(plant, box_radius, grid_pts, random_pts, seed, [&](const Vec& y) {
    const Vec grad = clf.gradV(y);
    double v = dot(grad, plant.f(y)) + clf.Q(y);
    for (int i = 0; i < plant.m; ++i) {
      const double gvg = dot(grad, plant.g[i](y));
      v -= clf.sigma * clf.delta[i](y) * gvg;
      v -= clf.s[i](y) * gvg * gvg;
    }
    return v;
  });
}

AssumptionReport check_assumption_b(const PlantModel& plant, const ClfBundle& clf,
                                    double box_radius, int grid_pts, int random_pts,
                                    std::uint64_t seed) {
  return run_check(plant, box_radius, grid_pts, random_pts, seed, [&](const Vec& y) {
    double lhs = 0.0;
    for (int i = 0; i < plant.m; ++i) lhs += norm_sq(plant.phi[i](y));
    return lhs - clf.mu(y) * (clf.Q(y) + clf.lambda);
  });
}

}  // namespace dads
