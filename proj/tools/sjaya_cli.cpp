// Command-line front end: run experiment grids, evaluate single problems and
// compare Jaya with SJaya.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sjaya/benchmarks.hpp"
#include "sjaya/compare.hpp"
#include "sjaya/fuelcell.hpp"
#include "sjaya/grid.hpp"
#include "sjaya/harness.hpp"
#include "sjaya/kernels.hpp"

namespace fs = std::filesystem;
using namespace sjaya;

namespace {

constexpr const char* kOutputEnv = "SJAYA_OUTPUT_DIR";

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') return env;
  return "results";
}

bool parse_on_off(const std::string& s) {
  if (s == "on" || s == "true" || s == "1") return true;
  if (s == "off" || s == "false" || s == "0") return false;
  throw UsageError("expected on|off, got '" + s + "'");
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> x;
  for (const auto& field : harness::split_csv_line(text)) {
    try {
      std::size_t used = 0;
      x.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + field + "'");
    }
  }
  return x;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string problem;
  std::string point;
  bool list = false;
};

int cmd_bench(const BenchArgs& a) {
  if (a.list || a.problem.empty()) {
    std::cout << "| id | dim | bounds | f(x*) |\n|---|---:|---|---:|\n";
    for (const auto& s : bench::specs())
      std::cout << "| " << s.key << " | " << s.dimension << " | [" << s.lower << ", " << s.upper
                << "] | " << s.global_min_value << " |\n";
    return 0;
  }
  const auto& s = bench::find(a.problem);
  const std::vector<double> x = a.point.empty() ? s.minimizer : parse_point(a.point);
  std::cout << harness::format_exact(bench::evaluate(s.id, x)) << "\n";
  return 0;
}

// --- fuelcell --------------------------------------------------------------

struct FuelArgs {
  double ns = 22.0;
  double np = 1.0;
  double area = 150.0;
  std::string params;
  std::string rounding = "on";
};

int cmd_fuelcell(const FuelArgs& a) {
  const auto params = a.params.empty() ? fuelcell::CellParams{} : fuelcell::load_params(a.params);
  const fuelcell::CostOptions options{parse_on_off(a.rounding)};
  fuelcell::StackDesign design{a.ns, a.np, a.area};
  const double cost = fuelcell::stack_cost(design, params, options);
  if (options.integer_rounding) {
    design.n_series = std::round(design.n_series);
    design.n_parallel = std::round(design.n_parallel);
  }
  const auto mpp = fuelcell::max_power_point(design, params);
  std::cout << "n_series=" << harness::format_exact(design.n_series)
            << " n_parallel=" << harness::format_exact(design.n_parallel)
            << " cell_area=" << harness::format_exact(design.cell_area) << "\n"
            << "p_load_max=" << harness::format_exact(mpp.p_load_max)
            << " v_load_mpp=" << harness::format_exact(mpp.v_load_mpp)
            << " i_at_mpp=" << harness::format_exact(mpp.i_at_mpp) << "\n"
            << "cost=" << harness::format_exact(cost) << "\n";
  return 0;
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string grid;
  std::string problem;
  std::string variant = "sjaya";
  std::size_t pop = 20;
  std::size_t gens = 100;
  std::optional<std::size_t> runs;
  std::uint64_t seed = 0;
  std::string r_schedule = "per_generation";
  std::string rounding = "on";
  std::string fc_params;
  std::string out;
  unsigned threads = 0;
};

int cmd_run(const RunArgs& a) {
  std::vector<harness::ExperimentRow> rows;
  if (!a.grid.empty()) {
    rows = harness::load_grid(a.grid);
    if (a.runs)
      for (auto& r : rows) r.runs = *a.runs;
  } else {
    if (a.problem.empty()) throw UsageError("run needs --grid or --problem");
    std::vector<Variant> variants;
    if (a.variant == "both") variants = {Variant::Jaya, Variant::SJaya};
    else variants = {parse_variant(a.variant)};
    for (Variant v : variants) {
      harness::ExperimentRow row;
      row.problem = a.problem;
      row.pop = a.pop;
      row.gens = a.gens;
      row.runs = a.runs.value_or(30);
      row.variant = v;
      row.base_seed = a.seed;
      row.r_schedule = parse_r_schedule(a.r_schedule);
      row.integer_rounding = parse_on_off(a.rounding);
      row.validate();
      rows.push_back(row);
    }
  }

  harness::BatchOptions options;
  options.threads = a.threads;
  if (!a.fc_params.empty()) options.fuelcell_params = fuelcell::load_params(a.fc_params);

  std::vector<harness::BatchResult> results;
  std::vector<std::string> failures;
  for (const auto& row : rows) {
    try {
      results.push_back(harness::execute_batch(row, options));
      if (results.back().degenerate())
        std::cerr << "note: " << harness::runs_file_name(row)
                  << ": single run, std fields are 0 by convention\n";
    } catch (const std::exception& e) {
      failures.push_back(e.what());
    }
  }

  const fs::path dir = output_dir(a.out);
  harness::write_results(dir, results);

  for (Variant v : {Variant::Jaya, Variant::SJaya}) {
    std::vector<harness::BatchSummary> summaries;
    for (const auto& r : results)
      if (r.row.variant == v) summaries.push_back(r.summary);
    if (summaries.empty()) continue;
    std::cout << "## " << to_string(v) << "\n\n" << harness::summary_markdown(summaries) << "\n";
  }
  std::cout << "results written to " << dir.string() << "\n";

  if (!failures.empty()) {
    std::cerr << failures.size() << " of " << rows.size() << " batches failed:\n";
    for (const auto& f : failures) std::cerr << "  " << f << "\n";
    return 1;
  }
  return 0;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  std::string jaya;
  std::string sjaya;
  std::string jaya_runs;
  std::string sjaya_runs;
  std::size_t runs = 30;
  std::string out;
};

int cmd_stats(const StatsArgs& a) {
  const fs::path dir = output_dir(a.out);
  bool did_something = false;

  if (!a.jaya.empty() || !a.sjaya.empty()) {
    if (a.jaya.empty() || a.sjaya.empty()) throw UsageError("--jaya and --sjaya go together");
    const auto jaya = harness::parse_summary_csv(harness::read_file(a.jaya));
    const auto sjaya = harness::parse_summary_csv(harness::read_file(a.sjaya));
    const auto welch = compare::welch_rows(jaya, sjaya, a.runs);
    const auto wilcoxon = compare::wilcoxon_over_means(jaya, sjaya);
    harness::write_file(dir / "welch.csv", compare::welch_csv(welch));
    harness::write_file(dir / "welch.md", compare::welch_markdown(welch));
    harness::write_file(dir / "wilcoxon.csv", compare::wilcoxon_csv(wilcoxon));
    harness::write_file(dir / "wilcoxon.md", compare::wilcoxon_markdown(wilcoxon));
    std::cout << "## Welch\n\n" << compare::welch_markdown(welch) << "\n## Wilcoxon\n\n"
              << compare::wilcoxon_markdown(wilcoxon) << "\n";
    did_something = true;
  }

  if (!a.jaya_runs.empty() || !a.sjaya_runs.empty()) {
    if (a.jaya_runs.empty() || a.sjaya_runs.empty())
      throw UsageError("--jaya-runs and --sjaya-runs go together");
    const auto jaya = harness::parse_runs_csv(harness::read_file(a.jaya_runs));
    const auto sjaya = harness::parse_runs_csv(harness::read_file(a.sjaya_runs));
    const std::vector<compare::MetricWilcoxon> report{compare::wilcoxon_over_runs(jaya, sjaya)};
    harness::write_file(dir / "wilcoxon_runs.csv", compare::wilcoxon_csv(report));
    std::cout << "## Wilcoxon (paired runs)\n\n" << compare::wilcoxon_markdown(report) << "\n";
    did_something = true;
  }

  if (!did_something) throw UsageError("stats needs --jaya/--sjaya or --jaya-runs/--sjaya-runs");
  std::cout << "reports written to " << dir.string() << "\n";
  return 0;
}

// --- tables ----------------------------------------------------------------

int cmd_tables(const std::vector<std::string>& files) {
  for (const auto& f : files) {
    const auto rows = harness::parse_summary_csv(harness::read_file(f));
    std::cout << "## " << fs::path(f).filename().string() << "\n\n"
              << harness::summary_markdown(rows) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jaya / semi-steady-state Jaya optimizers, benchmarks and significance tests"};
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "Force kernel implementation (scalar|avx2)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "List benchmarks or evaluate one at a point");
  bench_cmd->add_flag("--list", bench_args.list, "List the benchmark suite");
  bench_cmd->add_option("--problem", bench_args.problem, "Benchmark id");
  bench_cmd->add_option("--point", bench_args.point, "Comma-separated coordinates (default: x*)");

  FuelArgs fuel_args;
  auto* fuel_cmd = app.add_subcommand("fuelcell", "Evaluate a fuel cell stack design");
  fuel_cmd->add_option("--ns", fuel_args.ns, "Cells in series per group")->capture_default_str();
  fuel_cmd->add_option("--np", fuel_args.np, "Groups in parallel")->capture_default_str();
  fuel_cmd->add_option("--area", fuel_args.area, "Cell area in cm^2")->capture_default_str();
  fuel_cmd->add_option("--params", fuel_args.params, "JSON or TOML parameter overrides");
  fuel_cmd->add_option("--integer-rounding", fuel_args.rounding, "on|off")->capture_default_str();

  RunArgs run_args;
  std::size_t runs_value = 0;
  auto* run_cmd = app.add_subcommand("run", "Run batches and write summary / per-run CSVs");
  run_cmd->add_option("--grid", run_args.grid, "TOML experiment grid");
  run_cmd->add_option("--problem", run_args.problem, "Problem id (benchmark key or fuelcell)");
  run_cmd->add_option("--variant", run_args.variant, "jaya|sjaya|both")->capture_default_str();
  run_cmd->add_option("--pop", run_args.pop, "Population size")->capture_default_str();
  run_cmd->add_option("--gens", run_args.gens, "Generations")->capture_default_str();
  auto* runs_opt = run_cmd->add_option("--runs", runs_value, "Runs per row (default 30)");
  run_cmd->add_option("--seed", run_args.seed, "Base seed")->capture_default_str();
  run_cmd->add_option("--r-schedule", run_args.r_schedule, "per_generation|per_individual")
      ->capture_default_str();
  run_cmd->add_option("--integer-rounding", run_args.rounding, "on|off (fuel cell)")
      ->capture_default_str();
  run_cmd->add_option("--fc-params", run_args.fc_params, "Fuel cell parameter file");
  run_cmd->add_option("--out", run_args.out, std::string("Output directory (env ") + kOutputEnv + ")");
  run_cmd->add_option("--threads", run_args.threads, "Worker threads (0: all cores)");

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "Welch and Wilcoxon tests, Jaya vs SJaya");
  stats_cmd->add_option("--jaya", stats_args.jaya, "Jaya summary CSV");
  stats_cmd->add_option("--sjaya", stats_args.sjaya, "SJaya summary CSV");
  stats_cmd->add_option("--jaya-runs", stats_args.jaya_runs, "Jaya per-run CSV");
  stats_cmd->add_option("--sjaya-runs", stats_args.sjaya_runs, "SJaya per-run CSV");
  stats_cmd->add_option("--runs", stats_args.runs, "Runs behind each summary row")->capture_default_str();
  stats_cmd->add_option("--out", stats_args.out, std::string("Output directory (env ") + kOutputEnv + ")");

  std::vector<std::string> table_files;
  auto* tables_cmd = app.add_subcommand("tables", "Render summary CSVs as markdown tables");
  tables_cmd->add_option("files", table_files, "Summary CSV files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!simd.empty()) {
      const auto isa = simd == "avx2" ? kernels::Isa::Avx2 : kernels::Isa::Scalar;
      if (simd != "avx2" && simd != "scalar") throw UsageError("--simd expects scalar or avx2");
      if (!kernels::select(isa)) throw UsageError("--simd " + simd + " is not available here");
    }
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*fuel_cmd) return cmd_fuelcell(fuel_args);
    if (*run_cmd) {
      if (*runs_opt) run_args.runs = runs_value;
      return cmd_run(run_args);
    }
    if (*stats_cmd) return cmd_stats(stats_args);
    if (*tables_cmd) return cmd_tables(table_files);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
