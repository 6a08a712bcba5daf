#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpa/levy.hpp"
#include "fpa/problem.hpp"
#include "fpa/random.hpp"
#include "fpa/types.hpp"

namespace fpa {

/// Flower pollination parameters. Defaults are the n = 25, p = 0.8,
/// gamma = 0.1, lambda = 1.5 setting used throughout the benchmarks.
struct FpaParams {
  Index population = 25;
  double switch_probability = 0.8;
  double gamma = 0.1;
  double lambda = 1.5;
  Index max_iterations = 1000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Members are the columns of a d x n matrix; fitness[i] belongs to column i.
struct Population {
  Matrix members;
  Vector fitness;
  Index best_index = 0;

  Index size() const { return members.cols(); }
  auto member(Index i) const { return members.col(i); }
  double best_fitness() const { return fitness[best_index]; }
};

struct RunRecord {
  std::vector<double> best_per_iteration;
  std::size_t evaluations_used = 0;
  SolutionVector best_solution;
  double best_value = 0.0;
  std::uint64_t seed = 0;
};

/// Counts which move each member update used.
struct MoveCounter {
  std::size_t global = 0;
  std::size_t local = 0;
};

/// Uniform random population inside the bounds, evaluated, best located.
Population initialize(const ProblemDefinition& problem, const FpaParams& params, Rng& rng);

/// x_i + gamma * L (.) (g_best - x_i) with a given step vector, clamped.
SolutionVector global_pollination(const SolutionVector& x_i, const SolutionVector& g_best, double gamma,
                                  const Vector& step, const Bounds& bounds);

/// Same move with a fresh Levy step drawn from the stream.
SolutionVector global_pollination(const SolutionVector& x_i, const SolutionVector& g_best,
                                  const FpaParams& params, const LevyConfig& levy, Rng& rng,
                                  const Bounds& bounds);

/// x_i + epsilon * (x_j - x_k), clamped.
SolutionVector local_pollination(const SolutionVector& x_i, const SolutionVector& x_j,
                                 const SolutionVector& x_k, double epsilon, const Bounds& bounds);

/// Same move with epsilon ~ U[0, 1) drawn from the stream.
SolutionVector local_pollination(const SolutionVector& x_i, const SolutionVector& x_j,
                                 const SolutionVector& x_k, Rng& rng, const Bounds& bounds);

/// One sweep over the population in index order, then the best is relocated.
/// A member is replaced only by a strictly better candidate.
Population iterate(Population pop, const ProblemDefinition& problem, const FpaParams& params,
                   const LevyConfig& levy, Rng& rng, MoveCounter* counter = nullptr);

/// Full single-objective run: initialization plus max_iterations sweeps.
/// Uses the first objective of `problem`; constraints are not consulted.
RunRecord run(const ProblemDefinition& problem, const FpaParams& params, const LevyConfig& levy);

namespace detail {

struct Partners {
  Index j;
  Index k;
};

/// Two distinct indices drawn uniformly without replacement from [0, n).
Partners draw_partners(Index n, Rng& rng);

/// Random member inside the bounds, repaired for integer variables.
SolutionVector random_member(const ProblemDefinition& problem, Rng& rng);

/// Candidate for member i: global move toward column `best` with probability p,
/// otherwise a local move between two random members.
SolutionVector propose(const Matrix& members, Index i, Index best, const ProblemDefinition& problem,
                       const FpaParams& params, const LevyConfig& levy, Rng& rng, MoveCounter* counter);

/// Lowest index among the best scores.
template <class Score, class Better>
Index best_of(const std::vector<Score>& scores, Better&& better) {
  Index best = 0;
  for (Index i = 1; i < static_cast<Index>(scores.size()); ++i) {
    if (better(scores[static_cast<std::size_t>(i)], scores[static_cast<std::size_t>(best)])) best = i;
  }
  return best;
}

/// Shared pollination sweep. `evaluate` maps a candidate to a Score and
/// `better(a, b)` is a strict ordering on scores.
template <class Score, class Evaluate, class Better>
void sweep(Matrix& members, std::vector<Score>& scores, Index best, const ProblemDefinition& problem,
           const FpaParams& params, const LevyConfig& levy, Rng& rng, Evaluate&& evaluate, Better&& better,
           MoveCounter* counter) {
  for (Index i = 0; i < members.cols(); ++i) {
    SolutionVector candidate = propose(members, i, best, problem, params, levy, rng, counter);
    Score score = evaluate(candidate);
    auto& incumbent = scores[static_cast<std::size_t>(i)];
    if (better(score, incumbent)) {
      members.col(i) = candidate;
      incumbent = std::move(score);
    }
  }
}

}  // namespace detail

}  // namespace fpa
