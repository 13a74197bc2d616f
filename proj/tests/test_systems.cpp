#include <doctest.h>

#include <cmath>
#include <random>

#include "dads/errors.hpp"
#include "dads/systems.hpp"

using namespace dads;

TEST_SUITE_BEGIN("systems");

TEST_CASE("double integrator rhs matches hand substitution") {
  const PlantModel plant = double_integrator_plant();

  Vec dy = plant_rhs(plant, {1.0, 0.0}, {0.0}, {1.0, 1.0}, {0.0}, {0.01});
  CHECK(dy[0] == 0.0);
  CHECK(dy[1] == 1.0);

  dy = plant_rhs(plant, {0.0, 0.0}, {0.0}, {0.0, 0.0}, {0.0}, {3.7});
  CHECK(dy[0] == 0.0);
  CHECK(dy[1] == 0.0);

  dy = plant_rhs(plant, {1.0, 2.0}, {10.0}, {1.0, 1.0}, {0.5}, {0.01});
  CHECK(dy[0] == doctest::Approx(2.0));
  CHECK(dy[1] == doctest::Approx(3.6));
}

TEST_CASE("double integrator evaluators") {
  const PlantModel plant = double_integrator_plant();
  CHECK(plant.phi[0]({1.0, 0.0}) == Vec{1.0, 0.0});
  CHECK(plant.f({3.0, 4.0}) == Vec{4.0, 0.0});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Vec y{std::uniform_real_distribution<>(-10, 10)(rng),
                std::uniform_real_distribution<>(-10, 10)(rng)};
    CHECK(plant.dist[0](y) == Vec{1.0});
  }
}

TEST_CASE("origin is an equilibrium for zero input") {
  const PlantModel plant = double_integrator_plant();
  const Vec dy = plant_rhs(plant, {0.0, 0.0}, {0.0}, {0.0, 0.0}, {0.0}, {1.0});
  CHECK(dy == Vec{0.0, 0.0});
}

TEST_CASE("rhs is linear in (u, theta, d) for fixed y and b") {
  const PlantModel plant = double_integrator_plant();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<> dist(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec y{dist(rng), dist(rng)};
    const Vec b{std::abs(dist(rng)) + 0.1};
    const Vec u1{dist(rng)}, u2{dist(rng)};
    const Vec th1{dist(rng), dist(rng)}, th2{dist(rng), dist(rng)};
    const Vec d1{dist(rng)}, d2{dist(rng)};

    const Vec lhs_a = plant_rhs(plant, y, {u1[0] + u2[0]}, {th1[0] + th2[0], th1[1] + th2[1]},
                                {d1[0] + d2[0]}, b);
    const Vec lhs_b = plant_rhs(plant, y, {0.0}, {0.0, 0.0}, {0.0}, b);
    const Vec rhs_a = plant_rhs(plant, y, u1, th1, d1, b);
    const Vec rhs_b = plant_rhs(plant, y, u2, th2, d2, b);
    for (int j = 0; j < 2; ++j) {
      const double left = lhs_a[j] + lhs_b[j];
      const double right = rhs_a[j] + rhs_b[j];
      CHECK(std::abs(left - right) <=
            1e-12 * std::max({1.0, std::abs(left), std::abs(right)}));
    }
  }
}

TEST_CASE("rhs matches the symbolic double-integrator form on random points") {
  const PlantModel plant = double_integrator_plant();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<> dist(-20.0, 20.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double y1 = dist(rng), y2 = dist(rng), u = dist(rng);
    const double th1 = dist(rng), th2 = dist(rng), d = dist(rng);
    const double b = std::abs(dist(rng)) + 1e-3;
    const Vec dy = plant_rhs(plant, {y1, y2}, {u}, {th1, th2}, {d}, {b});
    CHECK(dy[0] == y2);
    CHECK(dy[1] == b * u + (y1 * th1 + y2 * th2) + d);
  }
}

TEST_CASE("rhs contract violations") {
  const PlantModel plant = double_integrator_plant();
  CHECK_THROWS_AS(plant_rhs(plant, {1.0}, {0.0}, {0.0, 0.0}, {0.0}, {1.0}), ConfigError);
  CHECK_THROWS_AS(plant_rhs(plant, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0}, {1.0}),
                  ConfigError);
  CHECK_THROWS_AS(plant_rhs(plant, {1.0, 0.0}, {0.0}, {0.0, 0.0}, {0.0}, {0.0}), DomainError);
  CHECK_THROWS_AS(plant_rhs(plant, {1.0, 0.0}, {0.0}, {0.0, 0.0}, {0.0}, {-1.0}), DomainError);
}

TEST_CASE("signal evaluation") {
  const Signal sine = Signal::sinusoid(2.0, 1.0, 0.0);
  CHECK(sine.eval(std::asin(1.0)) == doctest::Approx(2.0).epsilon(1e-12));

  const Signal c = Signal::constant(0.01);
  CHECK(c.eval(0.0) == 0.01);
  CHECK(c.eval(1234.5) == 0.01);

  const Signal z = Signal::zero();
  CHECK(z.eval(17.0) == 0.0);

  CHECK_THROWS_AS(c.eval(-1e-9), DomainError);
}

TEST_CASE("steps signal holds the value of the latest knot") {
  const Signal s = Signal::steps({0.0, 1.0, 2.5}, {5.0, -1.0, 3.0});
  CHECK(s.eval(0.0) == 5.0);
  CHECK(s.eval(0.999) == 5.0);
  CHECK(s.eval(1.0) == -1.0);
  CHECK(s.eval(2.5) == 3.0);
  CHECK(s.eval(1e6) == 3.0);
  CHECK(s.inf_value() == -1.0);

  CHECK_THROWS_AS(Signal::steps({1.0}, {2.0}), ConfigError);      // must start at 0
  CHECK_THROWS_AS(Signal::steps({0.0, 0.0}, {1.0, 2.0}), ConfigError);
}

TEST_CASE("vector signal evaluates componentwise") {
  VectorSignal vs;
  vs.comp = {Signal::constant(1.0), Signal::sinusoid(1.0, 2.0, 0.0)};
  const Vec v = vs.eval(0.0);
  CHECK(v == Vec{1.0, 0.0});
}

TEST_SUITE_END();
