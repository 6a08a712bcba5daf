#include <stdexcept>

#include "fpa/baselines.hpp"

namespace fpa {

void PsoParams::validate() const {
  if (population < 1) throw std::invalid_argument("PsoParams: population must be positive");
  // Zero inertia and zero learning rates are accepted for degenerate experiments.
  if (!(inertia >= 0.0 && inertia <= 1.0)) throw std::invalid_argument("PsoParams: inertia must lie in [0, 1]");
  if (!(beta1 >= 0.0) || !(beta2 >= 0.0)) throw std::invalid_argument("PsoParams: learning rates must be non-negative");
}

RunRecord pso_run(const ProblemDefinition& problem, const PsoParams& params, Index max_iterations) {
  params.validate();
  if (max_iterations < 1) throw std::invalid_argument("pso_run: max_iterations must be at least 1");
  const Index n = params.population;
  const Index d = problem.dimension;
  const Vector vmax = 0.5 * problem.bounds.range();

  Rng rng(params.seed);
  RunRecord record;
  record.seed = params.seed;
  std::size_t evaluations = 0;
  auto evaluate = [&](const SolutionVector& x) {
    ++evaluations;
    return problem.evaluate(x)[0];
  };

  Matrix x(d, n);
  Matrix v = Matrix::Zero(d, n);
  Vector fitness(n);
  for (Index i = 0; i < n; ++i) {
    x.col(i) = detail::random_member(problem, rng);
    fitness[i] = evaluate(x.col(i));
  }
  Matrix pbest = x;
  Vector pbest_fitness = fitness;
  Index g = 0;
  pbest_fitness.minCoeff(&g);
  SolutionVector gbest = pbest.col(g);

  Vector r1(d);
  Vector r2(d);
  for (Index t = 0; t < max_iterations; ++t) {
    for (Index i = 0; i < n; ++i) {
      for (Index c = 0; c < d; ++c) r1[c] = rng.uniform();
      for (Index c = 0; c < d; ++c) r2[c] = rng.uniform();
      v.col(i) = params.inertia * v.col(i) + params.beta1 * r1.cwiseProduct(pbest.col(i) - x.col(i)) +
                 params.beta2 * r2.cwiseProduct(gbest - x.col(i));
      v.col(i) = v.col(i).cwiseMax(-vmax).cwiseMin(vmax);
      x.col(i) = problem.repair(x.col(i) + v.col(i));
      const double f = evaluate(x.col(i));
      if (f < pbest_fitness[i]) {
        pbest_fitness[i] = f;
        pbest.col(i) = x.col(i);
      }
    }
    pbest_fitness.minCoeff(&g);
    gbest = pbest.col(g);
    record.best_per_iteration.push_back(pbest_fitness[g]);
  }

  record.best_value = pbest_fitness[g];
  record.best_solution = gbest;
  record.evaluations_used = evaluations;
  return record;
}

}  // namespace fpa
