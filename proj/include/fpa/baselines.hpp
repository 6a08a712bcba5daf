#pragma once

#include <cstdint>

#include "fpa/fpa.hpp"
#include "fpa/problem.hpp"

namespace fpa {

// Reference optimizers for single-objective comparisons. Both share the FPA
// run contract: same RunRecord, n * (1 + iterations) evaluations, results
// clamped to the box. The operator details below are baseline-definition
// choices, not properties of any published variant.

/// Real-coded generational GA: binary tournament selection, whole arithmetic
/// crossover, per-gene Gaussian mutation and elitism of one.
struct GaParams {
  Index population = 25;
  double p_crossover = 0.95;
  double p_mutation = 0.05;
  /// Mutation standard deviation as a fraction of each variable's range.
  double mutation_scale = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Global-best PSO with inertia weight; velocities start at zero and are
/// clamped to half the variable range.
struct PsoParams {
  Index population = 25;
  double inertia = 0.7;
  double beta1 = 1.5;
  double beta2 = 1.5;
  std::uint64_t seed = 0;

  void validate() const;
};

RunRecord ga_run(const ProblemDefinition& problem, const GaParams& params, Index max_iterations);

RunRecord pso_run(const ProblemDefinition& problem, const PsoParams& params, Index max_iterations);

}  // namespace fpa
