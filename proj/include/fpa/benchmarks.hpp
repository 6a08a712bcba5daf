#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpa/problem.hpp"
#include "fpa/types.hpp"

namespace fpa {

// ---------------------------------------------------------------------------
// Single-objective test functions. All have their global minimum at a known
// point; see make_problem for the bounds used by the registry.
// ---------------------------------------------------------------------------

template <typename Derived>
typename Derived::Scalar ackley(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto d = static_cast<Scalar>(x.size());
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  const Scalar mean_sq = x.squaredNorm() / d;
  const Scalar mean_cos = x.array().unaryExpr([&](Scalar v) { return std::cos(two_pi * v); }).sum() / d;
  return Scalar(-20) * std::exp(Scalar(-0.2) * std::sqrt(mean_sq)) - std::exp(mean_cos) + Scalar(20) +
         std::numbers::e_v<Scalar>;
}

template <typename Derived>
typename Derived::Scalar sphere(const Eigen::MatrixBase<Derived>& x) {
  return x.squaredNorm();
}

template <typename Derived>
typename Derived::Scalar easom(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Scalar sign = (x.size() % 2 == 1) ? Scalar(1) : Scalar(-1);  // (-1)^(d+1)
  const Scalar cos_product = x.array().cos().prod();
  const Scalar dist_sq = (x.array() - std::numbers::pi_v<Scalar>).square().sum();
  return sign * cos_product * std::exp(-dist_sq);
}

template <typename Derived>
typename Derived::Scalar griewank(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar product(1);
  for (Index i = 0; i < x.size(); ++i) {
    product *= std::cos(x[i] / std::sqrt(static_cast<Scalar>(i + 1)));
  }
  return x.squaredNorm() / Scalar(4000) - product + Scalar(1);
}

template <typename Derived>
typename Derived::Scalar rastrigin(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar sum = Scalar(10) * static_cast<Scalar>(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] - Scalar(10) * std::cos(two_pi * x[i]);
  }
  return sum;
}

template <typename Derived>
typename Derived::Scalar rosenbrock(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Index i = 0; i + 1 < x.size(); ++i) {
    const Scalar a = x[i] - Scalar(1);
    const Scalar b = x[i + 1] - x[i] * x[i];
    sum += a * a + Scalar(100) * b * b;
  }
  return sum;
}

template <typename Derived>
typename Derived::Scalar zakharov(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar weighted(0);
  for (Index i = 0; i < x.size(); ++i) {
    weighted += static_cast<Scalar>(i + 1) * x[i];
  }
  const Scalar half = weighted / Scalar(2);
  const Scalar half_sq = half * half;
  return x.squaredNorm() + half_sq + half_sq * half_sq;
}

// ---------------------------------------------------------------------------
// Bi-objective test problems.
// ---------------------------------------------------------------------------

/// ZDT1 (convex), ZDT2 (non-convex) or ZDT3 (disconnected); variant in {1, 2, 3}.
/// Throws std::invalid_argument on an empty vector, std::out_of_range on a bad variant.
ObjectiveVector zdt(int variant, const SolutionVector& x);

/// Li-Zhang LZ problem; x_1 in [0, 1], remaining variables in [-1, 1].
ObjectiveVector lz(const SolutionVector& x);

/// The Pareto-set point of LZ for a given x_1 in dimension d.
SolutionVector lz_pareto_point(double x1, Index d);

// ---------------------------------------------------------------------------
// Constrained design problems.
// ---------------------------------------------------------------------------

struct DesignEvaluation {
  ObjectiveVector objectives;
  ConstraintReport constraints;
};

/// Intermediate quantities of the welded beam model, x = (w, L, d, h).
struct WeldedBeamTerms {
  double sigma;  // bending stress
  double q;      // Q, moment
  double radius; // D
  double polar;  // J
  double delta;  // end deflection
  double beta;
  double alpha;
  double tau;    // shear stress
  double load;   // P, buckling load
};

WeldedBeamTerms welded_beam_terms(const SolutionVector& x);

/// Objectives (cost, deflection) and constraints g1..g7 of the welded beam.
DesignEvaluation welded_beam(const SolutionVector& x);

/// Objectives (mass, braking time) and constraints g1..g5 of the disc brake,
/// x = (r, R, F, s). s is read as stored; integrality is the caller's business.
DesignEvaluation disc_brake(const SolutionVector& x);

// ---------------------------------------------------------------------------
// Analytic fronts and the registry.
// ---------------------------------------------------------------------------

/// N points of the analytic front of `problem` as columns of a 2 x N matrix.
/// Supported: zdt1, zdt2, zdt3, lz.
Matrix true_front(const std::string& problem, Index n);

class UnknownNameError : public std::invalid_argument {
 public:
  explicit UnknownNameError(const std::string& name)
      : std::invalid_argument("unknown name: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Names accepted by make_problem, in registry order.
const std::vector<std::string>& problem_names();

/// Default dimension of a registered problem.
Index default_dimension(const std::string& name);

/// Builds a registered problem. dimension <= 0 selects the default; fixed
/// dimension problems (zdt*, welded-beam, disc-brake) reject other values.
/// Throws UnknownNameError for names outside the registry.
ProblemDefinition make_problem(const std::string& name, Index dimension = 0);

}  // namespace fpa
