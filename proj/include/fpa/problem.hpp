#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpa/types.hpp"

namespace fpa {

/// Box limits of the decision space. lower[i] < upper[i] for every i.
struct Bounds {
  Vector lower;
  Vector upper;

  Bounds() = default;
  Bounds(Vector lo, Vector hi);
  /// Same interval [lo, hi] in every one of d dimensions.
  static Bounds uniform(Index d, double lo, double hi);

  Index dimension() const { return lower.size(); }
  Vector range() const { return upper - lower; }
  bool contains(const Vector& x) const;

  /// Componentwise clamp to the nearest bound.
  template <typename Derived>
  Vector clamp(const Eigen::MatrixBase<Derived>& x) const {
    return x.cwiseMax(lower).cwiseMin(upper);
  }
};

/// Constraint values at one point. g_k <= 0 and h_j = 0 mean feasible.
///
/// Each term is tested against its own tolerance 1e-9 * max(1, |scale|)
/// before it contributes to total_violation, so total_violation is exactly
/// zero precisely when every constraint is met within tolerance.
struct ConstraintReport {
  Vector inequality;
  Vector equality;
  double total_violation = 0.0;

  bool feasible() const { return total_violation == 0.0; }

  static ConstraintReport make(Vector inequality, const Vector& inequality_scale,
                               Vector equality = Vector(), const Vector& equality_scale = Vector());
};

constexpr double kFeasibilityRelTol = 1e-9;

struct KnownOptimum {
  SolutionVector x;
  ObjectiveVector f;
};

/// Uniform description of a benchmark problem. Evaluators are pure.
struct ProblemDefinition {
  std::string name;
  Index dimension = 0;
  Index objectives = 1;
  Bounds bounds;
  std::function<ObjectiveVector(const SolutionVector&)> evaluate;
  /// Empty for unconstrained problems.
  std::function<ConstraintReport(const SolutionVector&)> constraints;
  std::vector<bool> discrete_mask;
  /// Generator of N reference points on the analytic front, columns of an m x N matrix.
  std::function<Matrix(Index)> true_front;
  std::optional<KnownOptimum> known_optimum;

  bool constrained() const { return static_cast<bool>(constraints); }
  bool has_true_front() const { return static_cast<bool>(true_front); }
  Index discrete_count() const;

  /// Total constraint violation at x (0 for unconstrained problems).
  double violation(const SolutionVector& x) const;

  /// Clamps x into the box and rounds the integer-valued variables.
  SolutionVector repair(const SolutionVector& x) const;
};

}  // namespace fpa
