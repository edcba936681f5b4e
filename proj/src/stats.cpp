#include "sjaya/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sjaya::stats {

namespace {

constexpr int kMaxFractionTerms = 200;
constexpr double kFractionEps = 1.0e-16;
constexpr double kTiny = 1.0e-300;

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double beta_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxFractionTerms; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kFractionEps) break;
  }
  return h;
}

// alpha = 0.05 one-tailed, n = 5 ... 30.
constexpr std::array<int, 26> kCriticalW = {0,  2,  3,  5,  8,  10, 13, 17,  21,  25,  30,  35,  41,
                                            47, 53, 60, 67, 75, 83, 91, 100, 110, 119, 130, 140, 151};

}  // namespace

std::optional<WelchT> welch_t(const SampleSummary& a, const SampleSummary& b) {
  if (a.n < 2 || b.n < 2) return std::nullopt;
  if (a.std == 0.0 && b.std == 0.0) return std::nullopt;
  const double va = a.std * a.std / static_cast<double>(a.n);
  const double vb = b.std * b.std / static_cast<double>(b.n);
  const double se2 = va + vb;
  const double t = (a.mean - b.mean - 0.0) / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / static_cast<double>(a.n - 1) +
                                 vb * vb / static_cast<double>(b.n - 1));
  return WelchT{t, df};
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("incomplete_beta: a and b must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("incomplete_beta: x outside [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double t_sf(double t, double df) {
  if (!(df > 0.0)) throw std::domain_error("t_sf: degrees of freedom must be positive");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (t == 0.0) return 0.5;
  if (std::isinf(t)) return t > 0.0 ? 0.0 : 1.0;
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return t > 0.0 ? tail : 1.0 - tail;
}

std::optional<WelchReport> welch_test(const SampleSummary& a, const SampleSummary& b) {
  const auto w = welch_t(a, b);
  if (!w) return std::nullopt;
  return WelchReport{w->t, w->df, t_sf(std::abs(w->t), w->df)};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

NormalApproximation wilcoxon_normal(std::size_t n, double w) {
  const double nn = static_cast<double>(n);
  NormalApproximation out;
  out.mean_w = nn * (nn + 1.0) / 4.0;
  out.std_w = std::sqrt(nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0);
  out.z = (w - out.mean_w) / out.std_w;
  out.p = normal_cdf(out.z);
  return out;
}

std::optional<int> critical_w(std::size_t n) {
  if (n < 5 || n > 30) return std::nullopt;
  return kCriticalW[n - 5];
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

WilcoxonReport wilcoxon(std::span<const std::pair<double, double>> pairs) {
  WilcoxonReport report;
  std::vector<double> magnitude;
  std::vector<bool> positive;
  for (const auto& [first, second] : pairs) {
    const double d = first - second;
    if (d == 0.0) {
      ++report.n_zero_diffs;
      continue;
    }
    magnitude.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  report.n_effective = magnitude.size();
  if (report.degenerate()) return report;

  const auto ranks = average_ranks(magnitude);
  for (std::size_t i = 0; i < ranks.size(); ++i) (positive[i] ? report.w_plus : report.w_minus) += ranks[i];
  report.w = std::min(report.w_plus, report.w_minus);
  report.critical_w = critical_w(report.n_effective);
  if (report.n_effective >= kMinNormalApproximationN)
    report.approximation = wilcoxon_normal(report.n_effective, report.w);
  return report;
}

}  // namespace sjaya::stats
