#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpa/archive.hpp"
#include "fpa/baselines.hpp"
#include "fpa/fpa.hpp"
#include "fpa/levy.hpp"
#include "fpa/mofpa.hpp"

namespace fpa::bench {

/// Process exit codes of the benchmark tool.
enum ExitCode : int { kOk = 0, kUnknownName = 2, kIoFailure = 3, kMissingInputs = 4 };

class HarnessError : public std::runtime_error {
 public:
  HarnessError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

/// Optimizer names accepted by run_experiment.
const std::vector<std::string>& optimizer_names();

/// One (problem, optimizer, settings) cell repeated over consecutive seeds.
/// Unset optional fields fall back to the per-problem defaults: population 25
/// for single-objective problems and 50 for bi-objective ones.
struct ExperimentSpec {
  std::string problem = "sphere";
  std::string optimizer = "fpa";
  Index dimension = 0;
  Index iterations = 1000;
  std::optional<Index> population;

  // fpa / mofpa
  double switch_probability = 0.8;
  double gamma = 0.1;
  double lambda = 1.5;
  MantegnaForm mantegna = MantegnaForm::standard;
  std::size_t archive_capacity = 100;
  WeightMode weight_mode = WeightMode::resample_per_iteration;
  Index points_requested = 100;
  Index truth_points = 10000;

  // ga
  double p_crossover = 0.95;
  double p_mutation = 0.05;
  // pso
  double inertia = 0.7;
  double beta = 1.5;

  Index repeats = 1;
  std::uint64_t seed_base = 1;
  /// No files are written when empty.
  std::filesystem::path output_dir;

  /// File name prefix shared by every output of this spec.
  std::string stem() const;
};

/// What the final value of a row measures.
enum class Metric { best, generalized_distance, archive_size };
std::string to_string(Metric metric);

struct ResultRow {
  std::string problem;
  std::string optimizer;
  std::uint64_t seed = 0;
  Metric metric = Metric::best;
  double final_value = 0.0;
  std::size_t evaluations = 0;
  double wall_time_ms = 0.0;
};

/// Everything one repeat produced.
struct RunOutput {
  ResultRow row;
  /// Best value (single objective), D_g, or archive size per iteration.
  std::vector<double> trace;
  std::optional<ParetoArchive> archive;
  /// E_f of the final archive when an analytic front exists.
  std::optional<double> front_error;
};

struct Summary {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;
};

Summary summarize(std::vector<double> values);

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<RunOutput> runs;
  Summary summary;

  std::vector<ResultRow> rows() const;
  std::vector<double> finals() const;
};

/// Runs spec.repeats seeds (seed_base, seed_base + 1, ...) concurrently and,
/// when an output directory is set, writes per-run convergence CSVs, the
/// result and summary CSVs, and the front/truth CSVs of multiobjective runs.
/// Throws HarnessError(kUnknownName) for names outside the registries and
/// HarnessError(kIoFailure) when the output cannot be written.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Canned reproduction targets.
enum class Table { t2, t3, t4, design_beam, design_brake };
Table parse_table(const std::string& name);
std::string to_string(Table table);

struct ReportRow {
  std::string item;
  std::string published;  // empty when there is no published counterpart
  std::optional<double> measured;
  std::string threshold;  // empty when the row is informational
  std::optional<bool> pass;
};

struct ReproduceOptions {
  std::filesystem::path output_dir = "results";
  /// Repeats per cell; 0 selects the target's default.
  Index repeats = 0;
  std::uint64_t seed_base = 1;
};

/// Runs the pre-canned experiments of a target and writes
/// `report_<target>.csv` plus the underlying experiment files.
std::vector<ReportRow> reproduce(Table table, const ReproduceOptions& options);

/// One-parameter sweep of the flower pollination optimizer.
struct SweepSpec {
  std::string parameter = "p";  // p, gamma, lambda or pop
  double from = 0.05;
  double to = 0.95;
  double step = 0.05;
  ExperimentSpec base;
};

struct SweepPoint {
  double value = 0.0;
  double mean = 0.0;
  double median = 0.0;
};

/// Writes `sweep_<parameter>.csv` (value, mean, median of final values).
std::vector<SweepPoint> sweep(const SweepSpec& spec);

/// Turns the outputs of earlier runs in `dir` into plot-ready two-column
/// files: iteration/value, iteration/log10(value) and f1/f2. Returns the
/// number of files written. Throws HarnessError(kMissingInputs) when the
/// directory holds no run outputs.
std::size_t emit_plot_data(const std::filesystem::path& dir);

/// Re-evaluates every archived solution and counts the feasible ones.
std::size_t count_feasible(const ProblemDefinition& problem, const ParetoArchive& archive);

/// Formats a double with 17 significant digits.
std::string format_number(double value);

}  // namespace fpa::bench
