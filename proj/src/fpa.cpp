#include "fpa/fpa.hpp"

#include <stdexcept>

namespace fpa {

void FpaParams::validate() const {
  if (population < 3) throw std::invalid_argument("FpaParams: population must be at least 3");
  if (!(switch_probability >= 0.0 && switch_probability <= 1.0)) {
    throw std::invalid_argument("FpaParams: switch probability must lie in [0, 1]");
  }
  if (!(gamma > 0.0)) throw std::invalid_argument("FpaParams: gamma must be positive");
  if (!(lambda > 0.0 && lambda <= 2.0)) throw std::invalid_argument("FpaParams: lambda must lie in (0, 2]");
  if (max_iterations < 1) throw std::invalid_argument("FpaParams: max_iterations must be at least 1");
}

SolutionVector global_pollination(const SolutionVector& x_i, const SolutionVector& g_best, double gamma,
                                  const Vector& step, const Bounds& bounds) {
  return bounds.clamp(x_i + gamma * step.cwiseProduct(g_best - x_i));
}

SolutionVector global_pollination(const SolutionVector& x_i, const SolutionVector& g_best,
                                  const FpaParams& params, const LevyConfig& levy, Rng& rng,
                                  const Bounds& bounds) {
  const Vector step = levy_step(levy, x_i.size(), rng);
  return global_pollination(x_i, g_best, params.gamma, step, bounds);
}

SolutionVector local_pollination(const SolutionVector& x_i, const SolutionVector& x_j,
                                 const SolutionVector& x_k, double epsilon, const Bounds& bounds) {
  return bounds.clamp(x_i + epsilon * (x_j - x_k));
}

SolutionVector local_pollination(const SolutionVector& x_i, const SolutionVector& x_j,
                                 const SolutionVector& x_k, Rng& rng, const Bounds& bounds) {
  return local_pollination(x_i, x_j, x_k, rng.uniform(), bounds);
}

namespace detail {

Partners draw_partners(Index n, Rng& rng) {
  const Index j = rng.index(n);
  Index k = rng.index(n - 1);
  if (k >= j) ++k;
  return {j, k};
}

SolutionVector random_member(const ProblemDefinition& problem, Rng& rng) {
  const Bounds& b = problem.bounds;
  SolutionVector x(b.dimension());
  for (Index c = 0; c < x.size(); ++c) {
    x[c] = b.lower[c] + (b.upper[c] - b.lower[c]) * rng.uniform();
  }
  return problem.repair(x);
}

SolutionVector propose(const Matrix& members, Index i, Index best, const ProblemDefinition& problem,
                       const FpaParams& params, const LevyConfig& levy, Rng& rng, MoveCounter* counter) {
  const SolutionVector x_i = members.col(i);
  SolutionVector candidate;
  if (rng.uniform() < params.switch_probability) {
    candidate = global_pollination(x_i, members.col(best), params, levy, rng, problem.bounds);
    if (counter) ++counter->global;
  } else {
    const double epsilon = rng.uniform();
    const Partners partners = draw_partners(members.cols(), rng);
    candidate = local_pollination(x_i, members.col(partners.j), members.col(partners.k), epsilon,
                                  problem.bounds);
    if (counter) ++counter->local;
  }
  return problem.repair(candidate);
}

}  // namespace detail

Population initialize(const ProblemDefinition& problem, const FpaParams& params, Rng& rng) {
  params.validate();
  Population pop;
  pop.members.resize(problem.dimension, params.population);
  pop.fitness.resize(params.population);
  for (Index i = 0; i < params.population; ++i) {
    pop.members.col(i) = detail::random_member(problem, rng);
    pop.fitness[i] = problem.evaluate(pop.members.col(i))[0];
  }
  pop.fitness.minCoeff(&pop.best_index);
  return pop;
}

namespace {

constexpr auto kLess = [](double a, double b) { return a < b; };

}  // namespace

Population iterate(Population pop, const ProblemDefinition& problem, const FpaParams& params,
                   const LevyConfig& levy, Rng& rng, MoveCounter* counter) {
  std::vector<double> scores(pop.fitness.data(), pop.fitness.data() + pop.fitness.size());
  auto evaluate = [&](const SolutionVector& x) { return problem.evaluate(x)[0]; };
  detail::sweep(pop.members, scores, pop.best_index, problem, params, levy, rng, evaluate, kLess, counter);
  pop.fitness = Eigen::Map<const Vector>(scores.data(), static_cast<Index>(scores.size()));
  pop.best_index = detail::best_of(scores, kLess);
  return pop;
}

RunRecord run(const ProblemDefinition& problem, const FpaParams& params, const LevyConfig& levy) {
  params.validate();
  Rng rng(params.seed);
  RunRecord record;
  record.seed = params.seed;

  Population pop = initialize(problem, params, rng);
  std::size_t evaluations = static_cast<std::size_t>(params.population);
  record.best_per_iteration.reserve(static_cast<std::size_t>(params.max_iterations));

  std::vector<double> scores(pop.fitness.data(), pop.fitness.data() + pop.fitness.size());
  auto evaluate = [&](const SolutionVector& x) {
    ++evaluations;
    return problem.evaluate(x)[0];
  };
  Index best = pop.best_index;
  for (Index t = 0; t < params.max_iterations; ++t) {
    detail::sweep(pop.members, scores, best, problem, params, levy, rng, evaluate, kLess, nullptr);
    best = detail::best_of(scores, kLess);
    record.best_per_iteration.push_back(scores[static_cast<std::size_t>(best)]);
  }

  record.evaluations_used = evaluations;
  record.best_solution = pop.members.col(best);
  record.best_value = scores[static_cast<std::size_t>(best)];
  return record;
}

}  // namespace fpa
