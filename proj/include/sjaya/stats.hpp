#pragma once

// Significance tests used to compare the two optimizers: the
// Smith-Satterthwaite (Welch) two-sample t-test on summary statistics and the
// paired Wilcoxon signed-rank test with its normal approximation.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sjaya::stats {

struct SampleSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, n - 1 denominator
  std::size_t n = 0;
};

struct WelchT {
  double t = 0.0;
  double df = 0.0;
};

/// t = (mean_a - mean_b) / sqrt(s_a^2/n_a + s_b^2/n_b) with Welch-Satterthwaite
/// degrees of freedom. By convention `a` is Jaya and `b` is SJaya, so a
/// positive t favours SJaya. Empty when both standard deviations are zero or
/// either sample has fewer than two observations.
std::optional<WelchT> welch_t(const SampleSummary& a, const SampleSummary& b);

/// Upper-tail probability P(T > t) of Student's t with `df` degrees of freedom.
double t_sf(double t, double df);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

struct WelchReport {
  double t = 0.0;
  double df = 0.0;
  double p = 0.0;  // one-tailed, in the direction of the observed t
};

/// welch_t plus the one-tailed p-value P(T > |t|).
std::optional<WelchReport> welch_test(const SampleSummary& a, const SampleSummary& b);

/// Standard normal CDF.
double normal_cdf(double z);

struct NormalApproximation {
  double mean_w = 0.0;
  double std_w = 0.0;
  double z = 0.0;
  double p = 0.0;  // lower tail Phi(z)
};

/// mean = n(n+1)/4, sd = sqrt(n(n+1)(2n+1)/24), z = (W - mean)/sd.
NormalApproximation wilcoxon_normal(std::size_t n, double w);

/// One-tailed alpha = 0.05 critical values of W for n in [5, 30].
std::optional<int> critical_w(std::size_t n);

inline constexpr std::size_t kMinNormalApproximationN = 6;

struct WilcoxonReport {
  std::size_t n_zero_diffs = 0;
  std::size_t n_effective = 0;
  double w_plus = 0.0;
  double w_minus = 0.0;
  double w = 0.0;
  double alpha = 0.05;
  std::optional<int> critical_w;
  /// Present when n_effective >= kMinNormalApproximationN.
  std::optional<NormalApproximation> approximation;

  bool degenerate() const noexcept { return n_effective == 0; }
};

/// Signed-rank test on d = first - second. Zero differences are dropped and
/// tied |d| get the average of the ranks they span.
WilcoxonReport wilcoxon(std::span<const std::pair<double, double>> pairs);

/// Average ranks (1-based) of the values, ties sharing the mean rank.
std::vector<double> average_ranks(std::span<const double> values);

}  // namespace sjaya::stats
