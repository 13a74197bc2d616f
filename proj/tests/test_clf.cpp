#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>

#include "dads/clf.hpp"
#include "dads/errors.hpp"

using namespace dads;

namespace {

// Eigenvalues of the symmetric 2x2 matrix [[a, b], [b, c]], ascending.
std::pair<double, double> eig_sym2(double a, double b, double c) {
  const double tr = a + c;
  const double disc = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
  return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

}  // namespace

TEST_SUITE_BEGIN("clf");

TEST_CASE("double integrator bundle values at c = 0.5") {
  const ClfBundle clf = double_integrator_clf(0.5);
  CHECK(clf.s[0]({0.0, 0.0}) == doctest::Approx(1.3125).epsilon(1e-15));
  // mu = 2*(sqrt(c^2+4)+c)/(c*sqrt(c^2+4)-c^2), which reduces to 4.5 + sqrt(4.25)
  CHECK(clf.mu({1.0, 2.0}) == doctest::Approx(4.5 + std::sqrt(4.25)).epsilon(1e-14));
  CHECK(clf.mu({0.0, 0.0}) == doctest::Approx(6.5615528128).epsilon(1e-9));

  const Vec y{1.0, 0.0};
  CHECK(clf.V(y) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(clf.Q(y) == doctest::Approx(0.3125).epsilon(1e-15));
  const Vec grad = clf.gradV(y);
  CHECK(grad[0] == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(grad[1] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(clf.sigma == 0.0);
  CHECK(clf.lambda == 0.0);
  CHECK_THROWS_AS(double_integrator_clf(0.0), DomainError);
}

TEST_CASE("regressor bound is tight: mu*c*(2+c^2-c*sqrt(c^2+4))/2 = 2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<> dist(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double c = dist(rng);
    const ClfBundle clf = double_integrator_clf(c);
    const double mu = clf.mu({0.0, 0.0});
    const double identity = mu * c * (2.0 + c * c - c * std::sqrt(c * c + 4.0)) / 2.0;
    CHECK(identity == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("shipped bundles satisfy Q >= 2*rate_lb(V) on samples") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<> dist(-5.0, 5.0);

  const ClfBundle di = double_integrator_clf(0.5);
  const ClfBundle gen = bundle_from_stabilizer(
      [](const Vec& y) { return 0.5 * y[0] * y[0]; }, [](const Vec& y) { return Vec{y[0]}; },
      {[](const Vec& y) { return -2.0 * y[0]; }}, {[](const Vec& y) { return Vec{y[0]}; }},
      1.0);

  for (int i = 0; i < 500; ++i) {
    const Vec y2{dist(rng), dist(rng)};
    CHECK(di.Q(y2) - 2.0 * di.rate_lb(di.V(y2)) >= -1e-12);
    const Vec y1{dist(rng)};
    CHECK(gen.Q(y1) - 2.0 * gen.rate_lb(gen.V(y1)) >= -1e-12);
  }
}

TEST_CASE("bundle from a known stabilizer") {
  auto V = [](const Vec& y) { return 0.5 * y[0] * y[0]; };
  auto gradV = [](const Vec& y) { return Vec{y[0]}; };

  SUBCASE("zero regressor gives mu = lambda") {
    const ClfBundle clf = bundle_from_stabilizer(
        V, gradV, {[](const Vec&) { return 0.0; }}, {[](const Vec&) { return Vec{0.0}; }},
        1.0);
    CHECK(clf.mu({0.7}) == 1.0);
    CHECK(clf.sigma == -1.0);
    CHECK(clf.s[0]({0.7}) == 0.0);
    CHECK(clf.Q({2.0}) == V(Vec{2.0}));
  }

  SUBCASE("|phi|^2 = V gives mu = 1 + V/(V+1), inside (1, 2) away from zero") {
    const ClfBundle clf = bundle_from_stabilizer(
        V, gradV, {[](const Vec&) { return 0.0; }},
        {[](const Vec& y) { return Vec{y[0] / std::sqrt(2.0)}; }}, 1.0);
    CHECK(clf.mu({0.0}) == 1.0);
    for (double x : {0.3, 1.0, 4.0, 50.0}) {
      const double mu = clf.mu({x});
      const double v = V(Vec{x});
      CHECK(mu == doctest::Approx(1.0 + v / (v + 1.0)).epsilon(1e-14));
      CHECK(mu > 1.0);
      CHECK(mu < 2.0);
    }
  }

  SUBCASE("lambda must be positive") {
    CHECK_THROWS_AS(bundle_from_stabilizer(V, gradV, {}, {}, 0.0), DomainError);
  }
}

TEST_CASE("damping inequality check on the double integrator") {
  const PlantModel plant = double_integrator_plant();
  const double c = 0.5;
  const ClfBundle clf = double_integrator_clf(c);
  const double s_exact = 1.3125;

  // Independent oracle: in (y1, w) coordinates the checked expression is the
  // quadratic form [[-c/2, (1-c^2)/2], [(1-c^2)/2, 3c/2 - s]]; it is
  // nonpositive iff its largest eigenvalue is <= 0, and s_exact makes that
  // eigenvalue exactly zero.
  const auto exact = eig_sym2(-c / 2.0, (1.0 - c * c) / 2.0, 1.5 * c - s_exact);
  CHECK(std::abs(exact.second) <= 1e-12);

  const AssumptionReport rep = check_assumption_a(plant, clf, 5.0, 101, 10000, 1);
  CHECK(rep.max_violation <= 1e-9);
  CHECK(rep.samples_checked == 101 * 101 + 10000);

  SUBCASE("any reduction of s is violated") {
    const auto scaled = eig_sym2(-c / 2.0, (1.0 - c * c) / 2.0, 1.5 * c - 0.9 * s_exact);
    CHECK(scaled.second > 0.0);

    ClfBundle weak = clf;
    weak.s = {[s_exact](const Vec&) { return 0.9 * s_exact; }};
    const AssumptionReport bad = check_assumption_a(plant, weak, 5.0, 101, 10000, 1);
    CHECK(bad.max_violation > 0.0);
  }

  SUBCASE("origin-only sample reports zero") {
    const AssumptionReport origin = check_assumption_a(plant, clf, 5.0, 1, 0, 1);
    CHECK(origin.max_violation == 0.0);
    CHECK(origin.samples_checked == 1);
  }
}

TEST_CASE("regressor bound check on the double integrator") {
  const PlantModel plant = double_integrator_plant();
  const double c = 0.5;
  const ClfBundle clf = double_integrator_clf(c);

  // Oracle: sup |y|^2 / V(y) = 2 / lambda_min(M) with M = [[1+c^2, c], [c, 1]],
  // and the bundle's mu*c equals that supremum exactly.
  const auto eig = eig_sym2(1.0 + c * c, c, 1.0);
  const double sup_ratio = 2.0 / eig.first;
  CHECK(clf.mu({0.0, 0.0}) * c == doctest::Approx(sup_ratio).epsilon(1e-12));
  CHECK(sup_ratio == doctest::Approx(3.28079).epsilon(1e-4));

  const AssumptionReport rep = check_assumption_b(plant, clf, 5.0, 101, 10000, 1);
  CHECK(rep.max_violation <= 1e-9);

  SUBCASE("halving mu is violated along the slow eigenvector") {
    ClfBundle weak = clf;
    const double half = clf.mu({0.0, 0.0}) / 2.0;
    weak.mu = [half](const Vec&) { return half; };
    const AssumptionReport bad = check_assumption_b(plant, weak, 5.0, 101, 10000, 1);
    CHECK(bad.max_violation > 0.0);
  }

  SUBCASE("origin-only sample reports zero") {
    const AssumptionReport origin = check_assumption_b(plant, clf, 5.0, 1, 0, 1);
    CHECK(origin.max_violation == 0.0);
  }
}

TEST_CASE("stabilizer bundle check reduces to the closed-loop decrease condition") {
  // Plant ydot = y + u with feedback k(y) = -2y: gradV*f + k*gradV*g = -y^2 <= -V.
  PlantModel plant;
  plant.n = plant.m = plant.p = plant.q = 1;
  plant.f = [](const Vec& y) { return Vec{y[0]}; };
  plant.g = {[](const Vec&) { return Vec{1.0}; }};
  plant.phi = {[](const Vec& y) { return Vec{y[0]}; }};
  plant.dist = {[](const Vec&) { return Vec{0.0}; }};

  auto V = [](const Vec& y) { return 0.5 * y[0] * y[0]; };
  auto gradV = [](const Vec& y) { return Vec{y[0]}; };

  const ClfBundle good = bundle_from_stabilizer(
      V, gradV, {[](const Vec& y) { return -2.0 * y[0]; }},
      {[](const Vec& y) { return Vec{y[0]}; }}, 1.0);
  CHECK(check_assumption_a(plant, good, 5.0, 201, 2000, 9).max_violation <= 1e-12);

  // Too-weak feedback k(y) = -0.4y fails the decrease condition.
  const ClfBundle weak = bundle_from_stabilizer(
      V, gradV, {[](const Vec& y) { return -0.4 * y[0]; }},
      {[](const Vec& y) { return Vec{y[0]}; }}, 1.0);
  CHECK(check_assumption_a(plant, weak, 5.0, 201, 2000, 9).max_violation > 1.0);
}

TEST_CASE("assumption reports are deterministic for a fixed seed") {
  const PlantModel plant = double_integrator_plant();
  const ClfBundle clf = double_integrator_clf(0.5);
  const AssumptionReport a = check_assumption_a(plant, clf, 5.0, 21, 500, 123);
  const AssumptionReport b = check_assumption_a(plant, clf, 5.0, 21, 500, 123);
  CHECK(a.max_violation == b.max_violation);
  CHECK(a.worst_point == b.worst_point);
  CHECK(a.seed == 123);
}

TEST_SUITE_END();
