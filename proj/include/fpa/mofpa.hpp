#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fpa/archive.hpp"
#include "fpa/fpa.hpp"
#include "fpa/levy.hpp"
#include "fpa/problem.hpp"
#include "fpa/random.hpp"

namespace fpa {

/// w_i = u_i / sum(u). Throws std::invalid_argument unless every u_i > 0.
Vector normalize_weights(const Vector& u);

/// Random positive weights summing to one; draws below 1e-12 are redrawn.
Vector random_weights(Index m, Rng& rng);

/// Weighted sum of objectives. Throws std::invalid_argument on a length mismatch.
double scalarize(const ObjectiveVector& f, const Vector& w);

/// A scalar fitness together with its total constraint violation.
struct ConstrainedValue {
  double fitness = 0.0;
  double violation = 0.0;
};

/// Feasibility rules. `less` means a is better: feasible beats infeasible,
/// two infeasible points compare by violation, two feasible ones by fitness.
std::weak_ordering compare_with_constraints(const ConstrainedValue& a, const ConstrainedValue& b);

enum class WeightMode {
  /// Fresh weights every iteration; every feasible evaluation feeds the archive.
  resample_per_iteration,
  /// One independent run per weight vector; each run contributes its best point.
  fixed_per_run,
};

struct MofpaParams {
  FpaParams fpa{.population = 50, .max_iterations = 1000};
  std::size_t archive_capacity = 100;
  WeightMode weight_mode = WeightMode::resample_per_iteration;
  /// Number of weight vectors (runs) in fixed_per_run mode.
  Index points_requested = 100;
  /// Overrides the random weights in fixed_per_run mode. May contain zeros.
  std::optional<Vector> fixed_weights;
  /// Size of the analytic front sample used for the D_g trace.
  Index truth_points = 10000;
  bool record_trace = true;

  void validate() const;
};

struct MoRunRecord {
  /// D_g of the archive after each iteration (each run in fixed_per_run mode);
  /// empty when the problem has no analytic front or tracing is off.
  std::vector<double> dg_trace;
  std::vector<std::size_t> archive_size_trace;
  std::size_t evaluations_used = 0;
  std::uint64_t seed = 0;
};

struct MoResult {
  ParetoArchive archive;
  MoRunRecord record;
};

class UnsupportedProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiobjective flower pollination through random-weight scalarization.
/// Integer variables flagged in the discrete mask are rounded after every move.
MoResult run_mo(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy);

/// Enumerates every admissible value of the single integer variable, solves
/// the continuous sub-problem for each with an equal share of the iteration
/// budget, and merges the fronts.
/// Throws UnsupportedProblemError unless exactly one variable is discrete.
MoResult solve_discrete(const ProblemDefinition& problem, const MofpaParams& params, const LevyConfig& levy);

}  // namespace fpa
