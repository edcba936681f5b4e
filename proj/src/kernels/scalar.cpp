#include "kernels_impl.hpp"

#include <cmath>

namespace sjaya::kernels::detail {

namespace {

// Mirrors _mm256_max_pd / _mm256_min_pd operand semantics, including which
// zero is returned for (-0, +0).
inline double vmax(double a, double b) noexcept { return a > b ? a : b; }
inline double vmin(double a, double b) noexcept { return a < b ? a : b; }

}  // namespace

void candidate_scalar(const CandidateArgs& a) {
  for (std::size_t i = 0; i < a.n; ++i) {
    const double c = a.current[i];
    const double ac = std::fabs(c);
    const double toward = a.r1[i] * (a.best[i] - ac);
    const double away = a.r2[i] * (a.worst[i] - ac);
    const double v = (c + toward) - away;
    a.out[i] = vmin(vmax(v, a.lower[i]), a.upper[i]);
  }
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double lane[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t l = 0; l < kLanes; ++l) lane[l] += x[i + l] * x[i + l];
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) total += x[i] * x[i];
  return total;
}

double weighted_sum_squares_scalar(const double* x, std::size_t n) {
  double lane[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t l = 0; l < kLanes; ++l)
      lane[l] += static_cast<double>(i + l + 1) * (x[i + l] * x[i + l]);
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) total += static_cast<double>(i + 1) * (x[i] * x[i]);
  return total;
}

}  // namespace sjaya::kernels::detail
