#pragma once

// Batch experiment runner: repeated seeded runs of one configuration, the
// three comparison metrics (best-of-run fitness, FirstHitEvals, success
// count) and CSV / markdown rendering of the summaries.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjaya/fuelcell.hpp"
#include "sjaya/types.hpp"

namespace sjaya::harness {

/// A run in the batch failed; carries the seed of the failing run.
class BatchError : public std::runtime_error {
 public:
  BatchError(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Malformed CSV input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentRow {
  std::string problem;  // benchmark key, "f2-rao", or "fuelcell"
  std::size_t pop = 20;
  std::size_t gens = 100;
  std::size_t runs = 30;
  Variant variant = Variant::SJaya;
  std::uint64_t base_seed = 0;
  RSchedule r_schedule = RSchedule::PerGeneration;
  bool integer_rounding = true;  // fuel cell only

  void validate() const;
};

/// Resolves a problem identifier to a Problem instance.
Problem resolve_problem(const std::string& id, const fuelcell::CellParams& params = {},
                        bool integer_rounding = true);

/// Canonical key for a problem identifier ("f2-rao" -> "sumsquares").
std::string canonical_problem_key(const std::string& id);

/// Evaluation count at which the best-so-far fitness first met the target;
/// empty if the run never met it.
std::optional<std::uint64_t> first_hit_evals(const RunTrace& trace, const SuccessTarget& target);

struct RunRecord {
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  std::optional<std::uint64_t> first_hit;

  bool operator==(const RunRecord&) const = default;
};

struct Stat3 {
  double best = 0.0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value

  bool operator==(const Stat3&) const = default;
};

/// One table row. Columns match the CSV layout exactly.
struct BatchSummary {
  std::string function;
  std::size_t pop = 0;
  std::size_t gens = 0;
  Stat3 fitness;
  std::size_t success = 0;
  std::optional<Stat3> first_hit;  // over successful runs only

  bool operator==(const BatchSummary&) const = default;
};

/// Aggregates per-run records. "best" is the minimum in both metrics.
BatchSummary summarize(const std::string& function, std::size_t pop, std::size_t gens,
                       std::span<const RunRecord> runs);

/// best / mean / sample std of a non-empty sample.
Stat3 describe(std::span<const double> values);

struct BatchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  fuelcell::CellParams fuelcell_params;
};

struct BatchResult {
  ExperimentRow row;
  std::vector<RunRecord> runs;  // ordered by seed
  BatchSummary summary;

  /// A single run has no spread; its std fields are 0 by convention.
  bool degenerate() const noexcept { return runs.size() == 1; }
};

/// Runs row.runs independent runs with seeds base_seed + k. Runs may execute
/// on several threads; the result does not depend on completion order.
/// Throws BatchError when any run fails.
BatchResult execute_batch(const ExperimentRow& row, const BatchOptions& options = {});

/// Same, with the problem supplied by the caller; row.problem only labels the
/// output.
BatchResult execute_batch(const ExperimentRow& row, const Problem& problem,
                          const BatchOptions& options = {});

// ---------------------------------------------------------------------------
// Rendering

inline constexpr const char* kSummaryHeader =
    "function,pop,gens,fit_best,fit_mean,fit_std,success,fhe_best,fhe_mean,fhe_std";
inline constexpr const char* kRunsHeader = "seed,best_fitness,first_hit";

/// Shortest representation that round-trips to the same double.
std::string format_exact(double value);

/// Four decimals; scientific notation for magnitudes below 1e-4; "0.0" for 0.
std::string format_rounded(double value);

std::string summary_csv(std::span<const BatchSummary> rows);
std::string summary_markdown(std::span<const BatchSummary> rows);
std::vector<BatchSummary> parse_summary_csv(const std::string& text);

std::string runs_csv(std::span<const RunRecord> runs);
std::vector<RunRecord> parse_runs_csv(const std::string& text);

/// Splits on commas; trims surrounding whitespace and a trailing '\r'.
std::vector<std::string> split_csv_line(const std::string& line);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Writes summary_<variant>.csv / .md and runs/<function>_p<pop>_g<gens>_<variant>.csv.
/// Returns the written paths.
std::vector<std::filesystem::path> write_results(const std::filesystem::path& dir,
                                                 std::span<const BatchResult> results);

std::string runs_file_name(const ExperimentRow& row);

}  // namespace sjaya::harness
