#include "fpa/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fpa {

namespace {

constexpr double kPi = std::numbers::pi;

double zdt_g(const SolutionVector& x) {
  const auto d = x.size();
  return 1.0 + 9.0 * x.tail(d - 1).sum() / static_cast<double>(d - 1);
}

double lz_target(double x1, Index j, Index d) {
  return std::sin(6.0 * kPi * x1 + static_cast<double>(j) * kPi / static_cast<double>(d));
}

}  // namespace

ObjectiveVector zdt(int variant, const SolutionVector& x) {
  if (x.size() < 2) {
    throw std::invalid_argument("zdt: need at least two decision variables");
  }
  const double f1 = x[0];
  const double g = zdt_g(x);
  const double ratio = f1 / g;
  double f2 = 0.0;
  switch (variant) {
    case 1:
      f2 = g * (1.0 - std::sqrt(ratio));
      break;
    case 2:
      f2 = g * (1.0 - ratio * ratio);
      break;
    case 3:
      f2 = g * (1.0 - std::sqrt(ratio) - ratio * std::sin(10.0 * kPi * f1));
      break;
    default:
      throw std::out_of_range("zdt: variant must be 1, 2 or 3");
  }
  return ObjectiveVector{{f1, f2}};
}

ObjectiveVector lz(const SolutionVector& x) {
  const Index d = x.size();
  if (d < 3) {
    throw std::invalid_argument("lz: need at least three decision variables");
  }
  const double x1 = x[0];
  double odd_sum = 0.0;
  double even_sum = 0.0;
  Index odd_count = 0;
  Index even_count = 0;
  // j is the 1-based variable index.
  for (Index j = 2; j <= d; ++j) {
    const double r = x[j - 1] - lz_target(x1, j, d);
    if (j % 2 == 1) {
      odd_sum += r * r;
      ++odd_count;
    } else {
      even_sum += r * r;
      ++even_count;
    }
  }
  const double f1 = x1 + 2.0 / static_cast<double>(odd_count) * odd_sum;
  const double f2 = 1.0 - std::sqrt(x1) + 2.0 / static_cast<double>(even_count) * even_sum;
  return ObjectiveVector{{f1, f2}};
}

SolutionVector lz_pareto_point(double x1, Index d) {
  SolutionVector x(d);
  x[0] = x1;
  for (Index j = 2; j <= d; ++j) {
    x[j - 1] = lz_target(x1, j, d);
  }
  return x;
}

WeldedBeamTerms welded_beam_terms(const SolutionVector& x) {
  const double w = x[0];
  const double len = x[1];
  const double d = x[2];
  const double h = x[3];
  WeldedBeamTerms t{};
  t.sigma = 504000.0 / (h * d * d);
  t.q = 6000.0 * (14.0 + len / 2.0);
  t.radius = 0.5 * std::sqrt(len * len + (w + d) * (w + d));
  t.polar = std::sqrt(2.0) * w * len * (len * len / 6.0 + (w + d) * (w + d) / 2.0);
  t.delta = 65856.0 / (30000.0 * h * d * d * d);
  t.beta = t.q * t.radius / t.polar;
  t.alpha = 6000.0 / (std::sqrt(2.0) * w * len);
  t.tau = std::sqrt(t.alpha * t.alpha + t.alpha * t.beta * len / t.radius + t.beta * t.beta);
  t.load = 0.61423e6 * d * h * h * h / 6.0 * (1.0 - d * std::sqrt(30.0 / 48.0) / 28.0);
  return t;
}

DesignEvaluation welded_beam(const SolutionVector& x) {
  const double w = x[0];
  const double len = x[1];
  const double d = x[2];
  const double h = x[3];
  const WeldedBeamTerms t = welded_beam_terms(x);

  ObjectiveVector f(2);
  f[0] = 1.10471 * w * w * len + 0.04811 * d * h * (14.0 + len);
  f[1] = t.delta;

  Vector g(7);
  g[0] = w - h;
  g[1] = t.delta - 0.25;
  g[2] = t.tau - 13600.0;
  g[3] = t.sigma - 30000.0;
  g[4] = 0.10471 * w * w + 0.04811 * h * d * (14.0 + len) - 5.0;
  g[5] = 0.125 - w;
  g[6] = 6000.0 - t.load;
  static const Vector scale = (Vector(7) << 1.0, 0.25, 13600.0, 30000.0, 5.0, 0.125, 6000.0).finished();
  return {std::move(f), ConstraintReport::make(std::move(g), scale)};
}

DesignEvaluation disc_brake(const SolutionVector& x) {
  const double r = x[0];
  const double big_r = x[1];
  const double force = x[2];
  const double s = x[3];
  const double area = big_r * big_r - r * r;
  const double cubic = big_r * big_r * big_r - r * r * r;

  ObjectiveVector f(2);
  f[0] = 4.9e-5 * area * (s - 1.0);
  f[1] = 9.82e6 * area / (force * s * cubic);

  Vector g(5);
  g[0] = 20.0 - (big_r - r);
  g[1] = 2.5 * (s + 1.0) - 30.0;
  g[2] = force / (3.14 * area) - 0.4;
  g[3] = 2.22e-3 * force * cubic / (area * area) - 1.0;
  g[4] = 900.0 - 0.0266 * force * s * cubic / area;
  static const Vector scale = (Vector(5) << 20.0, 30.0, 0.4, 1.0, 900.0).finished();
  return {std::move(f), ConstraintReport::make(std::move(g), scale)};
}

namespace {

Matrix sqrt_front(Index n) {
  Matrix front(2, n);
  for (Index i = 0; i < n; ++i) {
    const double f1 = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    front(0, i) = f1;
    front(1, i) = 1.0 - std::sqrt(f1);
  }
  return front;
}

Matrix zdt2_front(Index n) {
  Matrix front(2, n);
  for (Index i = 0; i < n; ++i) {
    const double f1 = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    front(0, i) = f1;
    front(1, i) = 1.0 - f1 * f1;
  }
  return front;
}

// Dense scan of x1 at g = 1, reduced to its non-dominated subset, then
// thinned to n points evenly spaced by index.
Matrix zdt3_front(Index n) {
  const Index grid = std::max<Index>(200000, 20 * n);
  std::vector<std::pair<double, double>> kept;
  kept.reserve(static_cast<std::size_t>(grid));
  double best_f2 = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < grid; ++i) {
    const double f1 = static_cast<double>(i) / static_cast<double>(grid - 1);
    const double f2 = 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
    // Sorted by f1, so a point is non-dominated iff it improves on every f2 seen so far.
    if (f2 < best_f2) {
      kept.emplace_back(f1, f2);
      best_f2 = f2;
    }
  }
  const auto total = static_cast<Index>(kept.size());
  const Index count = std::min(n, total);
  Matrix front(2, count);
  for (Index i = 0; i < count; ++i) {
    const Index k = count == 1 ? 0 : (i * (total - 1)) / (count - 1);
    front(0, i) = kept[static_cast<std::size_t>(k)].first;
    front(1, i) = kept[static_cast<std::size_t>(k)].second;
  }
  return front;
}

}  // namespace

Matrix true_front(const std::string& problem, Index n) {
  if (n < 1) {
    throw std::invalid_argument("true_front: need at least one point");
  }
  if (problem == "zdt1" || problem == "lz") return sqrt_front(n);
  if (problem == "zdt2") return zdt2_front(n);
  if (problem == "zdt3") return zdt3_front(n);
  throw std::invalid_argument("true_front: no analytic front for " + problem);
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {
      "ackley", "sphere", "easom", "griewank", "rastrigin", "rosenbrock",  "zakharov",
      "zdt1",   "zdt2",   "zdt3",  "lz",       "welded-beam", "disc-brake"};
  return names;
}

Index default_dimension(const std::string& name) {
  if (name == "easom") return 2;
  if (name == "zdt1" || name == "zdt2" || name == "zdt3" || name == "lz") return 30;
  if (name == "welded-beam" || name == "disc-brake") return 4;
  if (std::find(problem_names().begin(), problem_names().end(), name) == problem_names().end()) {
    throw UnknownNameError(name);
  }
  return 10;
}

namespace {

template <typename Fn>
ProblemDefinition scalar_problem(std::string name, Index d, double lo, double hi, Fn fn,
                                 std::optional<KnownOptimum> optimum) {
  ProblemDefinition p;
  p.name = std::move(name);
  p.dimension = d;
  p.objectives = 1;
  p.bounds = Bounds::uniform(d, lo, hi);
  p.evaluate = [fn](const SolutionVector& x) { return ObjectiveVector::Constant(1, fn(x)); };
  p.discrete_mask.assign(static_cast<std::size_t>(d), false);
  p.known_optimum = std::move(optimum);
  return p;
}

KnownOptimum optimum_at(Index d, double coordinate, double value) {
  return KnownOptimum{SolutionVector::Constant(d, coordinate), ObjectiveVector::Constant(1, value)};
}

}  // namespace

ProblemDefinition make_problem(const std::string& name, Index dimension) {
  const Index fixed = default_dimension(name);
  const bool scalable = !(name.starts_with("zdt") || name == "welded-beam" || name == "disc-brake");
  const Index d = dimension > 0 ? dimension : fixed;
  if (!scalable && d != fixed) {
    throw std::invalid_argument(name + " has fixed dimension " + std::to_string(fixed));
  }
  if (d < 1 || (name == "lz" && d < 3)) {
    throw std::invalid_argument("dimension too small for " + name);
  }

  if (name == "ackley") {
    return scalar_problem(name, d, -32.768, 32.768, [](const SolutionVector& x) { return ackley(x); },
                          optimum_at(d, 0.0, 0.0));
  }
  if (name == "sphere") {
    return scalar_problem(name, d, -5.12, 5.12, [](const SolutionVector& x) { return sphere(x); },
                          optimum_at(d, 0.0, 0.0));
  }
  if (name == "easom") {
    return scalar_problem(name, d, -100.0, 100.0, [](const SolutionVector& x) { return easom(x); },
                          optimum_at(d, kPi, -1.0));
  }
  if (name == "griewank") {
    return scalar_problem(name, d, -600.0, 600.0, [](const SolutionVector& x) { return griewank(x); },
                          optimum_at(d, 0.0, 0.0));
  }
  if (name == "rastrigin") {
    return scalar_problem(name, d, -5.12, 5.12, [](const SolutionVector& x) { return rastrigin(x); },
                          optimum_at(d, 0.0, 0.0));
  }
  if (name == "rosenbrock") {
    return scalar_problem(name, d, -5.0, 5.0, [](const SolutionVector& x) { return rosenbrock(x); },
                          optimum_at(d, 1.0, 0.0));
  }
  if (name == "zakharov") {
    return scalar_problem(name, d, -5.0, 10.0, [](const SolutionVector& x) { return zakharov(x); },
                          optimum_at(d, 0.0, 0.0));
  }

  ProblemDefinition p;
  p.name = name;
  p.dimension = d;
  p.objectives = 2;
  p.discrete_mask.assign(static_cast<std::size_t>(d), false);

  if (name.starts_with("zdt")) {
    const int variant = name[3] - '0';
    p.bounds = Bounds::uniform(d, 0.0, 1.0);
    p.evaluate = [variant](const SolutionVector& x) { return zdt(variant, x); };
    p.true_front = [name](Index n) { return true_front(name, n); };
    return p;
  }
  if (name == "lz") {
    Vector lo = Vector::Constant(d, -1.0);
    lo[0] = 0.0;
    p.bounds = Bounds(lo, Vector::Constant(d, 1.0));
    p.evaluate = [](const SolutionVector& x) { return lz(x); };
    p.true_front = [](Index n) { return true_front("lz", n); };
    return p;
  }
  if (name == "welded-beam") {
    p.bounds = Bounds((Vector(4) << 0.125, 0.1, 0.1, 0.125).finished(),
                      (Vector(4) << 2.0, 10.0, 10.0, 2.0).finished());
    p.evaluate = [](const SolutionVector& x) { return welded_beam(x).objectives; };
    p.constraints = [](const SolutionVector& x) { return welded_beam(x).constraints; };
    return p;
  }
  // disc-brake
  p.bounds = Bounds((Vector(4) << 55.0, 75.0, 1000.0, 2.0).finished(),
                    (Vector(4) << 80.0, 110.0, 3000.0, 20.0).finished());
  p.evaluate = [](const SolutionVector& x) { return disc_brake(x).objectives; };
  p.constraints = [](const SolutionVector& x) { return disc_brake(x).constraints; };
  p.discrete_mask[3] = true;
  return p;
}

}  // namespace fpa
