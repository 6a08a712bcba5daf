#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fpa/benchmarks.hpp"
#include "fpa/random.hpp"

using namespace fpa;
using std::numbers::pi;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double e : v) out[i++] = e;
  return out;
}

}  // namespace

TEST_CASE("ackley") {
  for (Index d : {1, 2, 10, 30}) CHECK(std::abs(ackley(Vector::Zero(d))) <= 1e-12);
  // Independent long double evaluation at (1, 1).
  const long double a = -20.0L * std::exp(-0.2L * std::sqrt(1.0L)) - std::exp(std::cos(2.0L * std::numbers::pi_v<long double>)) + 20.0L + std::exp(1.0L);
  CHECK(ackley(vec({1, 1})) == doctest::Approx(static_cast<double>(a)).epsilon(1e-12));
  CHECK(ackley(vec({1, 1})) == doctest::Approx(3.6254).epsilon(1e-4));
}

TEST_CASE("sphere") {
  CHECK(sphere(Vector::Zero(5)) == 0.0);
  CHECK(sphere(vec({1, 2, 3})) == doctest::Approx(14.0));
  CHECK(sphere(Vector::Constant(10, -5.12)) == doctest::Approx(262.144));
}

TEST_CASE("easom") {
  CHECK(easom(vec({pi, pi})) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(easom(vec({pi})) == doctest::Approx(-1.0).epsilon(1e-12));
  const double expected = -std::exp(-2.0 * pi * pi);
  CHECK(easom(vec({0, 0})) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(easom(vec({0, 0})) == doctest::Approx(-2.675e-9).epsilon(1e-3));
}

TEST_CASE("griewank rastrigin rosenbrock zakharov") {
  CHECK(griewank(Vector::Zero(10)) == doctest::Approx(0.0));
  CHECK(rastrigin(Vector::Zero(10)) == doctest::Approx(0.0));
  CHECK(rosenbrock(Vector::Ones(10)) == doctest::Approx(0.0));
  CHECK(zakharov(Vector::Zero(10)) == doctest::Approx(0.0));
  CHECK(rosenbrock(vec({0, 0})) == doctest::Approx(1.0));
  CHECK(zakharov(vec({1, 1})) == doctest::Approx(9.3125));
}

TEST_CASE("single objective functions accept float vectors") {
  Eigen::VectorXf x = Eigen::VectorXf::Ones(3);
  CHECK(sphere(x) == doctest::Approx(3.0f));
  CHECK(rosenbrock(x) == doctest::Approx(0.0f));
}

TEST_CASE("zdt examples") {
  Vector x = Vector::Zero(30);
  x[0] = 0.25;
  const Vector f1 = zdt(1, x);
  CHECK(f1[0] == doctest::Approx(0.25));
  CHECK(f1[1] == doctest::Approx(0.5));
  const Vector f3 = zdt(3, x);
  CHECK(f3[0] == doctest::Approx(0.25));
  CHECK(f3[1] == doctest::Approx(0.25));
  x[0] = 0.5;
  const Vector f2 = zdt(2, x);
  CHECK(f2[0] == doctest::Approx(0.5));
  CHECK(f2[1] == doctest::Approx(0.75));
  CHECK_THROWS_AS(zdt(4, x), std::out_of_range);
}

TEST_CASE("zdt outputs lie on the analytic front when g = 1") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Vector x = Vector::Zero(30);
    x[0] = rng.uniform();
    const double a = x[0];
    CHECK(std::abs(zdt(1, x)[1] - (1.0 - std::sqrt(a))) <= 1e-12);
    CHECK(std::abs(zdt(2, x)[1] - (1.0 - a * a)) <= 1e-12);
    CHECK(std::abs(zdt(3, x)[1] - (1.0 - std::sqrt(a) - a * std::sin(10.0 * pi * a))) <= 1e-12);
  }
}

TEST_CASE("lz examples") {
  const Vector on_set = lz_pareto_point(0.49, 30);
  const Vector f = lz(on_set);
  CHECK(f[0] == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.3).epsilon(1e-12));

  const Vector endpoint = lz(lz_pareto_point(0.0, 30));
  CHECK(std::abs(endpoint[0]) <= 1e-12);
  CHECK(endpoint[1] == doctest::Approx(1.0));

  // Brute-force oracle for x1 = 0.25, x_j = 0, d = 30. J1 = {3,5,...,29}, J2 = {2,4,...,30}.
  Vector x = Vector::Zero(30);
  x[0] = 0.25;
  long double s1 = 0, s2 = 0;
  int n1 = 0, n2 = 0;
  for (int j = 2; j <= 30; ++j) {
    const long double t = std::sin(6.0L * std::numbers::pi_v<long double> * 0.25L + j * std::numbers::pi_v<long double> / 30.0L);
    if (j % 2 == 1) {
      s1 += t * t;
      ++n1;
    } else {
      s2 += t * t;
      ++n2;
    }
  }
  CHECK(n1 == 14);
  CHECK(n2 == 15);
  const Vector g = lz(x);
  CHECK(g[0] == doctest::Approx(static_cast<double>(0.25L + 2.0L / n1 * s1)).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(static_cast<double>(0.5L + 2.0L / n2 * s2)).epsilon(1e-12));
}

TEST_CASE("lz Pareto set maps onto the front") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform();
    const Vector f = lz(lz_pareto_point(a, 30));
    CHECK(std::abs(f[1] - (1.0 - std::sqrt(f[0]))) <= 1e-10);
  }
}

TEST_CASE("welded beam") {
  const Vector x = vec({1, 1, 1, 1});
  const DesignEvaluation e = welded_beam(x);
  CHECK(e.objectives[0] == doctest::Approx(1.82636).epsilon(1e-10));
  CHECK(e.objectives[1] == doctest::Approx(2.1952).epsilon(1e-10));
  const WeldedBeamTerms t = welded_beam_terms(x);
  CHECK(t.sigma == doctest::Approx(504000.0));
  CHECK(t.q == doctest::Approx(87000.0));
  CHECK(t.radius == doctest::Approx(0.5 * std::sqrt(5.0)));
  CHECK(t.radius == doctest::Approx(1.1180).epsilon(1e-4));
  CHECK(t.delta == doctest::Approx(2.1952));
  REQUIRE(e.constraints.inequality.size() == 7);

  const DesignEvaluation boundary = welded_beam(vec({0.5, 1, 1, 0.5}));
  CHECK(boundary.constraints.inequality[0] == 0.0);
}

TEST_CASE("disc brake") {
  const DesignEvaluation a = disc_brake(vec({55, 75, 1000, 2}));
  CHECK(a.objectives[0] == doctest::Approx(0.1274).epsilon(1e-12));
  CHECK(a.constraints.inequality[0] == 0.0);
  const DesignEvaluation b = disc_brake(vec({55, 110, 3000, 20}));
  CHECK(b.objectives[0] == doctest::Approx(8.448825).epsilon(1e-12));
  const DesignEvaluation c = disc_brake(vec({55, 75, 1000, 11}));
  CHECK(c.constraints.inequality[1] == 0.0);
  REQUIRE(a.constraints.inequality.size() == 5);
}

TEST_CASE("total violation is zero exactly when every constraint holds") {
  for (const char* name : {"welded-beam", "disc-brake"}) {
    const ProblemDefinition p = make_problem(name);
    Rng rng(17);
    int feasible = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      Vector x(p.dimension);
      for (Index i = 0; i < p.dimension; ++i) x[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
      x = p.repair(x);
      const ConstraintReport r = p.constraints(x);
      const bool all_hold = (r.inequality.array() <= 0.0).all();
      if (all_hold) CHECK(r.total_violation == 0.0);
      if (r.total_violation == 0.0) ++feasible;
      if (r.total_violation > 0.0) CHECK_FALSE(all_hold);
    }
    CHECK(feasible > 0);
  }
}

TEST_CASE("evaluators are pure") {
  for (const std::string& name : problem_names()) {
    const ProblemDefinition p = make_problem(name);
    Rng rng(5);
    Vector x(p.dimension);
    for (Index i = 0; i < p.dimension; ++i) x[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
    x = p.repair(x);
    CHECK(p.evaluate(x) == p.evaluate(x));
  }
}

TEST_CASE("registry") {
  CHECK(problem_names().size() == 13);
  CHECK_THROWS_AS(make_problem("nope"), UnknownNameError);
  for (const std::string& name : problem_names()) {
    CAPTURE(name);
    const ProblemDefinition p = make_problem(name);
    CHECK(p.dimension == default_dimension(name));
    CHECK(static_cast<Index>(p.discrete_mask.size()) == p.dimension);
    CHECK(p.discrete_count() == (name == "disc-brake" ? 1 : 0));
    if (p.known_optimum) {
      CHECK((p.evaluate(p.known_optimum->x) - p.known_optimum->f).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
  CHECK(make_problem("sphere", 3).dimension == 3);
  CHECK(make_problem("zakharov").bounds.lower[0] == -5.0);
  CHECK(make_problem("zakharov").bounds.upper[0] == 10.0);
  CHECK(make_problem("ackley").bounds.upper[0] == doctest::Approx(32.768));
  CHECK(make_problem("lz").bounds.lower[1] == -1.0);
}

TEST_CASE("disc brake repair rounds the friction surface count") {
  const ProblemDefinition p = make_problem("disc-brake");
  const Vector y = p.repair(vec({60, 90, 2000, 7.6}));
  CHECK(y[3] == 8.0);
  CHECK(y[0] == 60.0);
  const Vector z = p.repair(vec({10, 200, 2000, 40}));
  CHECK(z[0] == 55.0);
  CHECK(z[1] == 110.0);
  CHECK(z[3] == 20.0);
}

TEST_CASE("true fronts") {
  const Matrix zdt1 = true_front("zdt1", 3);
  REQUIRE(zdt1.cols() == 3);
  CHECK(zdt1(0, 0) == 0.0);
  CHECK(zdt1(1, 0) == 1.0);
  CHECK(zdt1(0, 2) == 1.0);
  CHECK(zdt1(1, 2) == doctest::Approx(0.0));

  const Matrix zdt3 = true_front("zdt3", 10000);
  CHECK(zdt3.row(0).minCoeff() >= 0.0);
  CHECK(zdt3.row(0).maxCoeff() == doctest::Approx(0.852).epsilon(0.002 / 0.852));
  CHECK(zdt3.row(1).minCoeff() == doctest::Approx(-0.773).epsilon(0.002 / 0.773));
  CHECK(zdt3.row(1).maxCoeff() <= 1.0);

  const Matrix zdt2 = true_front("zdt2", 101);
  for (Index i = 0; i < zdt2.cols(); ++i) CHECK(zdt2(1, i) == doctest::Approx(1.0 - zdt2(0, i) * zdt2(0, i)));

  const Matrix lz = true_front("lz", 5);
  CHECK(lz(0, 1) == doctest::Approx(0.25));
  CHECK(lz(1, 1) == doctest::Approx(0.5));

  CHECK_THROWS(true_front("sphere", 10));
}

TEST_CASE("zdt3 truth points are mutually non-dominated") {
  const Matrix f = true_front("zdt3", 500);
  for (Index i = 0; i < f.cols(); ++i) {
    for (Index j = 0; j < f.cols(); ++j) {
      if (i == j) continue;
      const bool dom = (f.col(j).array() <= f.col(i).array()).all() && (f.col(j).array() < f.col(i).array()).any();
      CHECK_FALSE(dom);
    }
  }
}
