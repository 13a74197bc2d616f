#include "dads/controller.hpp"

#include <string>

#include "dads/errors.hpp"

namespace dads {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ConfigError(std::string("dads: ") + name + " must be positive");
}

void require_rho(const DadsParams& params, double rho) {
  if (!(rho > params.kappa))
    throw DomainError("dads: rho must exceed kappa (rho = " + std::to_string(rho) +
                      ", kappa = " + std::to_string(params.kappa) + ")");
}

void require_plain_bundle(const ClfBundle& clf, const char* variant) {
  if (clf.sigma != 0.0 || clf.lambda != 0.0)
    throw ConfigError(std::string("dads: variant=") + variant +
                      " requires a bundle with sigma = 0 and lambda = 0");
}

struct GainEval {
  Vec r;    // gains
  Vec lgv;  // gradV * g_i
};

GainEval eval_gains(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                    const Vec& y, double rho) {
  require_rho(params, rho);
  const double C = params.damping;
  const double E = rho;
  const Vec grad = clf.gradV(y);

  GainEval out;
  out.r.resize(plant.m);
  out.lgv.resize(plant.m);

  switch (params.variant) {
    case GainVariant::Full: {
      if (2.0 * C * params.kappa < 1.0)
        throw ConfigError("dads: variant=full requires 2*damping*kappa >= 1");
      const double mu = clf.mu(y);
      for (int i = 0; i < plant.m; ++i) {
        const double G = dot(grad, plant.g[i](y));
        const double si = clf.s[i](y);
        const double del = clf.delta[i](y);
        const double P = norm_sq(plant.phi[i](y)) + norm_sq(plant.dist[i](y)) +
                         E * E * mu + del * del;
        out.lgv[i] = G;
        out.r[i] = C * E * si * si * G * G + E * si +
                   C * C * C * E * E * E * P * P * G * G + C * E * E * P;
      }
      break;
    }
    case GainVariant::Simplified: {
      require_plain_bundle(clf, "simplified");
      const double mu = clf.mu(y);
      for (int i = 0; i < plant.m; ++i) {
        const double G = dot(grad, plant.g[i](y));
        const double P = clf.s[i](y) + 0.5 * mu * E * E +
                         C * E * (norm_sq(plant.dist[i](y)) + norm_sq(plant.phi[i](y)));
        out.lgv[i] = G;
        out.r[i] = E * P * (1.0 + C * P * G * G);
      }
      break;
    }
    case GainVariant::Matched: {
      require_plain_bundle(clf, "matched");
      for (int i = 0; i < plant.m; ++i) {
        if (norm_sq(plant.phi[i](y)) != 0.0)
          throw ConfigError("dads: variant=matched requires phi_i = 0, found a nonzero "
                            "regressor at a sample point");
        const double G = dot(grad, plant.g[i](y));
        const double P = clf.s[i](y) + C * E * norm_sq(plant.dist[i](y));
        out.lgv[i] = G;
        out.r[i] = E * P * (1.0 + C * P * G * G);
      }
      break;
    }
  }
  return out;
}

}  // namespace

void validate_dads(const DadsParams& params, const ClfBundle& clf) {
  require_positive(params.epsilon, "epsilon");
  require_positive(params.gamma, "gamma");
  require_positive(params.damping, "damping");
  require_positive(params.kappa, "kappa");
  switch (params.variant) {
    case GainVariant::Full:
      if (2.0 * params.damping * params.kappa < 1.0)
        throw ConfigError("dads: variant=full requires 2*damping*kappa >= 1");
      break;
    case GainVariant::Simplified:
      require_plain_bundle(clf, "simplified");
      break;
    case GainVariant::Matched:
      require_plain_bundle(clf, "matched");
      break;
  }
}

Vec gain_full(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
              const Vec& y, double rho) {
  DadsParams p = params;
  p.variant = GainVariant::Full;
  return eval_gains(plant, clf, p, y, rho).r;
}

Vec gain_simplified(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                    const Vec& y, double rho) {
  DadsParams p = params;
  p.variant = GainVariant::Simplified;
  return eval_gains(plant, clf, p, y, rho).r;
}

Vec gain_matched(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                 const Vec& y, double rho) {
  DadsParams p = params;
  p.variant = GainVariant::Matched;
  return eval_gains(plant, clf, p, y, rho).r;
}

Vec dads_gains(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
               const Vec& y, double rho) {
  return eval_gains(plant, clf, params, y, rho).r;
}

Vec dads_control(const PlantModel& plant, const ClfBundle& clf, const DadsParams& params,
                 const Vec& y, double rho) {
  const GainEval ge = eval_gains(plant, clf, params, y, rho);
  Vec u(plant.m);
  for (int i = 0; i < plant.m; ++i) u[i] = -ge.r[i] * ge.lgv[i];
  return u;
}

double adaptation_rate(const ClfBundle& clf, const DadsParams& params, const Vec& y,
                       double rho) {
  require_rho(params, rho);
  return params.gamma * pos(clf.V(y) - params.epsilon);
}

double disturbance_level(double d_bound, double theta_bound, double b_floor,
                         double gain_level, int channels, double sigma, double lambda,
                         double damping, double kappa) {
  if (!(b_floor > 0.0))
    throw DomainError("disturbance_level: b_floor must be positive");
  if (d_bound < 0.0 || theta_bound < 0.0 || gain_level < 0.0)
    throw DomainError("disturbance_level: bounds must be nonnegative");
  const double m = channels;
  const double lvl = kappa + gain_level;
  const double th = pos(theta_bound - lvl);
  const double bb = pos(1.0 / b_floor - lvl);
  const double num = m * d_bound * d_bound + m * sigma * sigma + m * th * th +
                     2.0 * damping * kappa * lambda + 2.0 * m * b_floor * bb * bb;
  return num / (4.0 * damping * lvl);
}

}  // namespace dads
