#include <stdexcept>
#include <vector>

#include "fpa/baselines.hpp"

namespace fpa {

void GaParams::validate() const {
  if (population < 2) throw std::invalid_argument("GaParams: population must be at least 2");
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0) || !(p_mutation >= 0.0 && p_mutation <= 1.0)) {
    throw std::invalid_argument("GaParams: probabilities must lie in [0, 1]");
  }
  if (!(mutation_scale >= 0.0)) throw std::invalid_argument("GaParams: mutation scale must be non-negative");
}

namespace {

Index tournament(const Vector& fitness, Rng& rng) {
  const Index a = rng.index(fitness.size());
  const Index b = rng.index(fitness.size());
  return fitness[b] < fitness[a] ? b : a;
}

}  // namespace

RunRecord ga_run(const ProblemDefinition& problem, const GaParams& params, Index max_iterations) {
  params.validate();
  if (max_iterations < 1) throw std::invalid_argument("ga_run: max_iterations must be at least 1");
  const Index n = params.population;
  const Index d = problem.dimension;
  const Vector sigma = params.mutation_scale * problem.bounds.range();

  Rng rng(params.seed);
  RunRecord record;
  record.seed = params.seed;
  std::size_t evaluations = 0;
  auto evaluate = [&](const SolutionVector& x) {
    ++evaluations;
    return problem.evaluate(x)[0];
  };

  Matrix pop(d, n);
  Vector fitness(n);
  for (Index i = 0; i < n; ++i) {
    pop.col(i) = detail::random_member(problem, rng);
    fitness[i] = evaluate(pop.col(i));
  }

  auto mutate = [&](SolutionVector& x) {
    for (Index c = 0; c < d; ++c) {
      if (rng.uniform() < params.p_mutation) x[c] += sigma[c] * rng.normal();
    }
    x = problem.repair(x);
  };

  Matrix next(d, n);
  Vector next_fitness(n);
  for (Index t = 0; t < max_iterations; ++t) {
    Index elite = 0;
    const double elite_fitness = fitness.minCoeff(&elite);

    for (Index i = 0; i < n; i += 2) {
      const SolutionVector a = pop.col(tournament(fitness, rng));
      const SolutionVector b = pop.col(tournament(fitness, rng));
      SolutionVector c1 = a;
      SolutionVector c2 = b;
      if (rng.uniform() < params.p_crossover) {
        const double alpha = rng.uniform();
        c1 = alpha * a + (1.0 - alpha) * b;
        c2 = (1.0 - alpha) * a + alpha * b;
      }
      mutate(c1);
      next.col(i) = c1;
      if (i + 1 < n) {
        mutate(c2);
        next.col(i + 1) = c2;
      }
    }
    for (Index i = 0; i < n; ++i) next_fitness[i] = evaluate(next.col(i));

    // The elite survives unless some offspring already matches it.
    if (next_fitness.minCoeff() > elite_fitness) {
      Index worst = 0;
      next_fitness.maxCoeff(&worst);
      next.col(worst) = pop.col(elite);
      next_fitness[worst] = elite_fitness;
    }
    pop.swap(next);
    fitness.swap(next_fitness);
    record.best_per_iteration.push_back(fitness.minCoeff());
  }

  Index best = 0;
  record.best_value = fitness.minCoeff(&best);
  record.best_solution = pop.col(best);
  record.evaluations_used = evaluations;
  return record;
}

}  // namespace fpa
