#include "sjaya/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "sjaya/benchmarks.hpp"
#include "sjaya/optimizer.hpp"

namespace sjaya::harness {

void ExperimentRow::validate() const {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (pop < 2) throw ConfigError("pop must be at least 2");
  canonical_problem_key(problem);
}

std::string canonical_problem_key(const std::string& id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "fuelcell" || key == "fuel-cell" || key == "pemfc") return "fuelcell";
  return std::string(bench::find(key).key);
}

Problem resolve_problem(const std::string& id, const fuelcell::CellParams& params,
                        bool integer_rounding) {
  const std::string key = canonical_problem_key(id);
  if (key == "fuelcell") return fuelcell::make_problem(params, {integer_rounding});
  return bench::make_problem(bench::find(key).id);
}

std::optional<std::uint64_t> first_hit_evals(const RunTrace& trace, const SuccessTarget& target) {
  for (const auto& point : trace.improvements)
    if (target.met(point.best_fitness)) return point.evals;
  return std::nullopt;
}

Stat3 describe(std::span<const double> values) {
  if (values.empty()) throw std::logic_error("describe: empty sample");
  Stat3 s;
  s.best = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

BatchSummary summarize(const std::string& function, std::size_t pop, std::size_t gens,
                       std::span<const RunRecord> runs) {
  BatchSummary out;
  out.function = function;
  out.pop = pop;
  out.gens = gens;
  std::vector<double> fitness;
  std::vector<double> hits;
  for (const auto& r : runs) {
    fitness.push_back(r.best_fitness);
    if (r.first_hit) hits.push_back(static_cast<double>(*r.first_hit));
  }
  out.fitness = describe(fitness);
  out.success = hits.size();
  if (!hits.empty()) out.first_hit = describe(hits);
  return out;
}

BatchResult execute_batch(const ExperimentRow& row, const BatchOptions& options) {
  row.validate();
  ExperimentRow canonical = row;
  canonical.problem = canonical_problem_key(row.problem);
  return execute_batch(canonical,
                       resolve_problem(row.problem, options.fuelcell_params, row.integer_rounding),
                       options);
}

BatchResult execute_batch(const ExperimentRow& row, const Problem& problem, const BatchOptions& options) {
  if (row.runs < 1) throw ConfigError("runs must be at least 1");
  if (row.pop < 2) throw ConfigError("pop must be at least 2");
  BatchResult result;
  result.row = row;
  result.runs.resize(row.runs);
  std::vector<std::exception_ptr> errors(row.runs);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < row.runs; k = next.fetch_add(1)) {
      const std::uint64_t seed = row.base_seed + k;
      try {
        OptimizerConfig config{row.pop, row.gens, seed, row.variant, row.r_schedule};
        const RunTrace trace = run(problem, config);
        result.runs[k] = RunRecord{seed, trace.best_fitness(), first_hit_evals(trace, problem.target)};
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(row.runs)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k]) continue;
    const std::uint64_t seed = row.base_seed + k;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      throw BatchError(row.problem + " " + to_string(row.variant) + ": run with seed " +
                           std::to_string(seed) + " failed: " + e.what(),
                       seed);
    }
  }

  result.summary = summarize(row.problem, row.pop, row.gens, result.runs);
  return result;
}

// ---------------------------------------------------------------------------

std::string format_exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_rounded(double value) {
  if (value == 0.0) return "0.0";
  char buf[64];
  if (std::abs(value) < 1.0e-4)
    std::snprintf(buf, sizeof buf, "%.4e", value);
  else
    std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

namespace {

std::string format_count(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", value);
  return buf;
}

double parse_double(const std::string& field, std::size_t line) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + field + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string& field, std::size_t line) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw ParseError("line " + std::to_string(line) + ": not a non-negative integer: '" + field +
                     "'");
  return v;
}

template <typename RowFn>
void for_each_row(const std::string& text, const char* header, std::size_t columns, RowFn&& fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (!seen_header) {
      if (line != header) throw ParseError("line " + std::to_string(line_no) + ": expected header '" + header + "'");
      seen_header = true;
      continue;
    }
    if (fields.size() != columns)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                       " fields, found " + std::to_string(fields.size()));
    fn(fields, line_no);
  }
  if (!seen_header) throw ParseError("missing header line");
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string summary_csv(std::span<const BatchSummary> rows) {
  std::string out = std::string(kSummaryHeader) + "\n";
  for (const auto& r : rows) {
    out += r.function + "," + std::to_string(r.pop) + "," + std::to_string(r.gens) + "," +
           format_exact(r.fitness.best) + "," + format_exact(r.fitness.mean) + "," +
           format_exact(r.fitness.std) + "," + std::to_string(r.success) + ",";
    if (r.first_hit)
      out += format_exact(r.first_hit->best) + "," + format_exact(r.first_hit->mean) + "," +
             format_exact(r.first_hit->std);
    else
      out += ",,";
    out += "\n";
  }
  return out;
}

std::string summary_markdown(std::span<const BatchSummary> rows) {
  std::string out =
      "| function | pop | gens | fit_best | fit_mean | fit_std | success | fhe_best | fhe_mean | fhe_std |\n"
      "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : rows) {
    out += "| " + r.function + " | " + std::to_string(r.pop) + " | " + std::to_string(r.gens) +
           " | " + format_rounded(r.fitness.best) + " | " + format_rounded(r.fitness.mean) + " | " +
           format_rounded(r.fitness.std) + " | " + std::to_string(r.success) + " | ";
    if (r.first_hit)
      out += format_count(r.first_hit->best) + " | " + format_rounded(r.first_hit->mean) + " | " +
             format_rounded(r.first_hit->std) + " |\n";
    else
      out += "--- | --- | --- |\n";
  }
  return out;
}

std::vector<BatchSummary> parse_summary_csv(const std::string& text) {
  std::vector<BatchSummary> rows;
  for_each_row(text, kSummaryHeader, 10, [&](const std::vector<std::string>& f, std::size_t line) {
    BatchSummary s;
    s.function = f[0];
    s.pop = parse_unsigned(f[1], line);
    s.gens = parse_unsigned(f[2], line);
    s.fitness = {parse_double(f[3], line), parse_double(f[4], line), parse_double(f[5], line)};
    s.success = parse_unsigned(f[6], line);
    const bool any = !f[7].empty() || !f[8].empty() || !f[9].empty();
    const bool all = !f[7].empty() && !f[8].empty() && !f[9].empty();
    if (any && !all)
      throw ParseError("line " + std::to_string(line) + ": first-hit columns partially filled");
    if (all) s.first_hit = Stat3{parse_double(f[7], line), parse_double(f[8], line), parse_double(f[9], line)};
    rows.push_back(std::move(s));
  });
  return rows;
}

std::string runs_csv(std::span<const RunRecord> runs) {
  std::string out = std::string(kRunsHeader) + "\n";
  for (const auto& r : runs) {
    out += std::to_string(r.seed) + "," + format_exact(r.best_fitness) + ",";
    if (r.first_hit) out += std::to_string(*r.first_hit);
    out += "\n";
  }
  return out;
}

std::vector<RunRecord> parse_runs_csv(const std::string& text) {
  std::vector<RunRecord> runs;
  for_each_row(text, kRunsHeader, 3, [&](const std::vector<std::string>& f, std::size_t line) {
    RunRecord r;
    r.seed = parse_unsigned(f[0], line);
    r.best_fitness = parse_double(f[1], line);
    if (!f[2].empty()) r.first_hit = parse_unsigned(f[2], line);
    runs.push_back(r);
  });
  return runs;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string runs_file_name(const ExperimentRow& row) {
  return canonical_problem_key(row.problem) + "_p" + std::to_string(row.pop) + "_g" +
         std::to_string(row.gens) + "_" + to_string(row.variant) + ".csv";
}

std::vector<std::filesystem::path> write_results(const std::filesystem::path& dir,
                                                 std::span<const BatchResult> results) {
  std::vector<std::filesystem::path> written;
  std::map<std::string, std::vector<BatchSummary>> by_variant;
  for (const auto& r : results) {
    by_variant[to_string(r.row.variant)].push_back(r.summary);
    const auto path = dir / "runs" / runs_file_name(r.row);
    write_file(path, runs_csv(r.runs));
    written.push_back(path);
  }
  for (const auto& [variant, rows] : by_variant) {
    const auto csv = dir / ("summary_" + variant + ".csv");
    const auto md = dir / ("summary_" + variant + ".md");
    write_file(csv, summary_csv(rows));
    write_file(md, summary_markdown(rows));
    written.push_back(csv);
    written.push_back(md);
  }
  return written;
}

}  // namespace sjaya::harness
