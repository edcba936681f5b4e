#pragma once

// Jaya-vs-SJaya comparison reports built from batch summaries: a Welch test
// per table row and metric, and a Wilcoxon signed-rank test across rows per
// metric.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sjaya/harness.hpp"
#include "sjaya/stats.hpp"

namespace sjaya::compare {

struct WelchRow {
  std::string function;
  std::size_t pop = 0;
  std::size_t gens = 0;
  std::optional<stats::WelchReport> fitness;    // best-of-run fitness
  std::optional<stats::WelchReport> first_hit;  // FirstHitEvals
};

/// Pairs rows by (function, pop, gens). `runs` is the sample size of the
/// best-of-run metric; the FirstHitEvals sample size is each row's success
/// count. Throws harness::ParseError if the two tables do not cover the same
/// rows.
std::vector<WelchRow> welch_rows(std::span<const harness::BatchSummary> jaya,
                                 std::span<const harness::BatchSummary> sjaya, std::size_t runs);

struct MetricWilcoxon {
  std::string metric;
  stats::WilcoxonReport report;
};

/// Signed-rank tests over the per-row means (Jaya minus SJaya), one for the
/// mean best-of-run fitness and one for the mean FirstHitEvals. Rows where
/// either side has no FirstHitEvals mean are left out of the second test.
std::vector<MetricWilcoxon> wilcoxon_over_means(std::span<const harness::BatchSummary> jaya,
                                                std::span<const harness::BatchSummary> sjaya);

/// Per-run best-fitness pairs matched by seed.
MetricWilcoxon wilcoxon_over_runs(std::span<const harness::RunRecord> jaya,
                                  std::span<const harness::RunRecord> sjaya);

inline constexpr const char* kWelchHeader = "function,pop,gens,fit_t,fit_p,fhe_t,fhe_p,fit_df,fhe_df";
inline constexpr const char* kWilcoxonHeader =
    "metric,zero_diffs,n,w_plus,w_minus,w,alpha,critical_w,mean_w,std_w,z,p";

std::string welch_csv(std::span<const WelchRow> rows);
std::string welch_markdown(std::span<const WelchRow> rows);
std::string wilcoxon_csv(std::span<const MetricWilcoxon> rows);
std::string wilcoxon_markdown(std::span<const MetricWilcoxon> rows);

}  // namespace sjaya::compare
