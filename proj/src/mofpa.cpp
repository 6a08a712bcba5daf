#include "fpa/mofpa.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <memory>

#include "fpa/metrics.hpp"

namespace fpa {

Vector normalize_weights(const Vector& u) {
  if (u.size() == 0 || !(u.array() > 0.0).all()) {
    throw std::invalid_argument("normalize_weights: every draw must be positive");
  }
  return u / u.sum();
}

Vector random_weights(Index m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("random_weights: need at least one objective");
  constexpr double kMinDraw = 1e-12;
  Vector u(m);
  for (Index i = 0; i < m; ++i) {
    do {
      u[i] = rng.uniform();
    } while (u[i] < kMinDraw);
  }
  return u / u.sum();
}

double scalarize(const ObjectiveVector& f, const Vector& w) {
  if (f.size() != w.size()) throw std::invalid_argument("scalarize: length mismatch");
  return w.dot(f);
}

std::weak_ordering compare_with_constraints(const ConstrainedValue& a, const ConstrainedValue& b) {
  const bool a_feasible = a.violation <= 0.0;
  const bool b_feasible = b.violation <= 0.0;
  if (a_feasible != b_feasible) {
    return a_feasible ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  if (!a_feasible) {
    return std::weak_order(a.violation, b.violation);
  }
  return std::weak_order(a.fitness, b.fitness);
}

void MofpaParams::validate() const {
  fpa.validate();
  if (archive_capacity < 1) throw std::invalid_argument("MofpaParams: archive capacity must be positive");
  if (points_requested < 1) throw std::invalid_argument("MofpaParams: points_requested must be positive");
  if (weight_mode == WeightMode::resample_per_iteration &&
      archive_capacity < static_cast<std::size_t>(points_requested)) {
    throw std::invalid_argument("MofpaParams: archive capacity below the requested point count");
  }
  if (truth_points < 1) throw std::invalid_argument("MofpaParams: truth_points must be positive");
}

namespace {

struct Scored {
  ObjectiveVector objectives;
  double violation = 0.0;
  double key = 0.0;
};

bool scored_better(const Scored& a, const Scored& b) {
  return compare_with_constraints({a.key, a.violation}, {b.key, b.violation}) < 0;
}

/// Evaluation bookkeeping shared by both weight modes.
class Evaluator {
 public:
  Evaluator(const ProblemDefinition& problem, ParetoArchive& archive) : problem_(problem), archive_(archive) {}

  Scored operator()(const SolutionVector& x, const Vector& weights) {
    ++evaluations_;
    Scored s;
    s.objectives = problem_.evaluate(x);
    s.violation = problem_.violation(x);
    s.key = scalarize(s.objectives, weights);
    if (offer_all_ && s.violation == 0.0) {
      archive_.insert({x, s.objectives, 0.0});
    }
    return s;
  }

  void offer_every_evaluation(bool on) { offer_all_ = on; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const ProblemDefinition& problem_;
  ParetoArchive& archive_;
  std::size_t evaluations_ = 0;
  bool offer_all_ = true;
};

class Tracer {
 public:
  Tracer(const ProblemDefinition& problem, const MofpaParams& params) {
    if (params.record_trace && problem.has_true_front()) {
      truth_ = std::make_unique<FrontIndex>(problem.true_front(params.truth_points));
    }
  }

  void record(const ParetoArchive& archive, MoRunRecord& record) const {
    record.archive_size_trace.push_back(archive.size());
    if (!truth_) return;
    record.dg_trace.push_back(archive.empty() ? std::numeric_limits<double>::infinity()
                                              : front_metrics(archive.objective_matrix(), *truth_)
                                                    .generalized_distance);
  }

 private:
  std::unique_ptr<FrontIndex> truth_;
};

struct Swarm {
  Matrix members;
  std::vector<Scored> scores;
};

Swarm seed_swarm(const ProblemDefinition& problem, const FpaParams& params, Rng& rng,
                 const Vector& weights, Evaluator& evaluate) {
  Swarm swarm;
  swarm.members.resize(problem.dimension, params.population);
  swarm.scores.reserve(static_cast<std::size_t>(params.population));
  for (Index i = 0; i < params.population; ++i) {
    swarm.members.col(i) = detail::random_member(problem, rng);
    swarm.scores.push_back(evaluate(swarm.members.col(i), weights));
  }
  return swarm;
}

MoResult run_resampled(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy) {
  const FpaParams& fp = params.fpa;
  MoResult result{ParetoArchive(params.archive_capacity), {}};
  result.record.seed = fp.seed;
  Rng rng(fp.seed);
  Evaluator evaluator(problem, result.archive);
  const Tracer tracer(problem, params);

  // Initial keys are placeholders; they are recomputed once weights are drawn.
  Vector weights = Vector::Constant(problem.objectives, 1.0 / static_cast<double>(problem.objectives));
  Swarm swarm = seed_swarm(problem, fp, rng, weights, evaluator);

  auto evaluate = [&](const SolutionVector& x) { return evaluator(x, weights); };
  for (Index t = 0; t < fp.max_iterations; ++t) {
    weights = random_weights(problem.objectives, rng);
    for (auto& s : swarm.scores) s.key = scalarize(s.objectives, weights);
    const Index best = detail::best_of(swarm.scores, scored_better);
    detail::sweep(swarm.members, swarm.scores, best, problem, fp, levy, rng, evaluate, scored_better, nullptr);
    tracer.record(result.archive, result.record);
  }
  result.record.evaluations_used = evaluator.evaluations();
  return result;
}

MoResult run_fixed(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy) {
  MoResult result{ParetoArchive(params.archive_capacity), {}};
  result.record.seed = params.fpa.seed;
  const Tracer tracer(problem, params);
  ParetoArchive scratch;
  std::size_t evaluations = 0;

  for (Index k = 0; k < params.points_requested; ++k) {
    FpaParams fp = params.fpa;
    fp.seed = params.fpa.seed + static_cast<std::uint64_t>(k);
    Rng rng(fp.seed);
    const Vector weights = params.fixed_weights ? *params.fixed_weights : random_weights(problem.objectives, rng);
    if (weights.size() != problem.objectives) {
      throw std::invalid_argument("run_mo: fixed weights do not match the objective count");
    }

    Evaluator evaluator(problem, scratch);
    evaluator.offer_every_evaluation(false);
    Swarm swarm = seed_swarm(problem, fp, rng, weights, evaluator);
    auto evaluate = [&](const SolutionVector& x) { return evaluator(x, weights); };
    Index best = detail::best_of(swarm.scores, scored_better);
    for (Index t = 0; t < fp.max_iterations; ++t) {
      detail::sweep(swarm.members, swarm.scores, best, problem, fp, levy, rng, evaluate, scored_better, nullptr);
      best = detail::best_of(swarm.scores, scored_better);
    }
    evaluations += evaluator.evaluations();

    const Scored& winner = swarm.scores[static_cast<std::size_t>(best)];
    if (winner.violation == 0.0) {
      result.archive.insert({swarm.members.col(best), winner.objectives, 0.0});
    }
    tracer.record(result.archive, result.record);
  }
  result.record.evaluations_used = evaluations;
  return result;
}

}  // namespace

MoResult run_mo(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy) {
  params.validate();
  if (problem.objectives < 2) {
    throw std::invalid_argument("run_mo: problem " + problem.name + " has a single objective");
  }
  return params.weight_mode == WeightMode::resample_per_iteration ? run_resampled(problem, params, levy)
                                                                  : run_fixed(problem, params, levy);
}

namespace {

SolutionVector expand(const SolutionVector& reduced, Index slot, double value) {
  SolutionVector x(reduced.size() + 1);
  x.head(slot) = reduced.head(slot);
  x[slot] = value;
  x.tail(reduced.size() - slot) = reduced.tail(reduced.size() - slot);
  return x;
}

Vector drop(const Vector& v, Index slot) {
  Vector out(v.size() - 1);
  out.head(slot) = v.head(slot);
  out.tail(v.size() - 1 - slot) = v.tail(v.size() - 1 - slot);
  return out;
}

ProblemDefinition fix_variable(const ProblemDefinition& problem, Index slot, double value) {
  ProblemDefinition sub;
  sub.name = problem.name + "[fixed]";
  sub.dimension = problem.dimension - 1;
  sub.objectives = problem.objectives;
  sub.bounds = Bounds(drop(problem.bounds.lower, slot), drop(problem.bounds.upper, slot));
  sub.discrete_mask.assign(static_cast<std::size_t>(sub.dimension), false);
  sub.evaluate = [&problem, slot, value](const SolutionVector& y) { return problem.evaluate(expand(y, slot, value)); };
  if (problem.constrained()) {
    sub.constraints = [&problem, slot, value](const SolutionVector& y) {
      return problem.constraints(expand(y, slot, value));
    };
  }
  return sub;
}

}  // namespace

MoResult solve_discrete(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy) {
  params.validate();
  if (problem.discrete_count() != 1) {
    throw UnsupportedProblemError("solve_discrete: " + problem.name +
                                  " must have exactly one discrete variable");
  }
  if (problem.dimension < 2) {
    throw UnsupportedProblemError("solve_discrete: nothing continuous left to optimize");
  }
  const auto slot = static_cast<Index>(
      std::find(problem.discrete_mask.begin(), problem.discrete_mask.end(), true) - problem.discrete_mask.begin());
  const auto first = static_cast<long>(std::ceil(problem.bounds.lower[slot]));
  const auto last = static_cast<long>(std::floor(problem.bounds.upper[slot]));
  const Index branches = last - first + 1;

  MofpaParams sub_params = params;
  sub_params.fpa.max_iterations = std::max<Index>(1, params.fpa.max_iterations / branches);
  sub_params.record_trace = false;

  std::vector<ProblemDefinition> subs;
  subs.reserve(static_cast<std::size_t>(branches));
  for (long v = first; v <= last; ++v) subs.push_back(fix_variable(problem, slot, static_cast<double>(v)));

  std::vector<std::future<MoResult>> pending;
  for (Index b = 0; b < branches; ++b) {
    MofpaParams p = sub_params;
    p.fpa.seed = params.fpa.seed + static_cast<std::uint64_t>(b);
    pending.push_back(std::async(std::launch::async, [&subs, b, p, &levy] {
      return run_mo(subs[static_cast<std::size_t>(b)], p, levy);
    }));
  }

  MoResult merged{ParetoArchive(params.archive_capacity), {}};
  merged.record.seed = params.fpa.seed;
  for (Index b = 0; b < branches; ++b) {
    MoResult part = pending[static_cast<std::size_t>(b)].get();
    const double value = static_cast<double>(first + b);
    for (const auto& e : part.archive.entries()) {
      merged.archive.insert({expand(e.solution, slot, value), e.objectives, e.violation});
    }
    merged.record.evaluations_used += part.record.evaluations_used;
    merged.record.archive_size_trace.push_back(merged.archive.size());
  }
  return merged;
}

}  // namespace fpa
