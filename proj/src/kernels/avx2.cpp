#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>

namespace sjaya::kernels::detail {

namespace {

inline double horizontal_sum(__m256d acc) {
  alignas(32) double lane[kLanes];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

void candidate_avx2(const CandidateArgs& a) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + kLanes <= a.n; i += kLanes) {
    const __m256d c = _mm256_loadu_pd(a.current + i);
    const __m256d ac = _mm256_andnot_pd(sign, c);
    const __m256d toward = _mm256_mul_pd(_mm256_loadu_pd(a.r1 + i),
                                         _mm256_sub_pd(_mm256_loadu_pd(a.best + i), ac));
    const __m256d away = _mm256_mul_pd(_mm256_loadu_pd(a.r2 + i),
                                       _mm256_sub_pd(_mm256_loadu_pd(a.worst + i), ac));
    __m256d v = _mm256_sub_pd(_mm256_add_pd(c, toward), away);
    v = _mm256_max_pd(v, _mm256_loadu_pd(a.lower + i));
    v = _mm256_min_pd(v, _mm256_loadu_pd(a.upper + i));
    _mm256_storeu_pd(a.out + i, v);
  }
  if (i < a.n) {
    CandidateArgs tail = a;
    tail.current += i;
    tail.best += i;
    tail.worst += i;
    tail.r1 += i;
    tail.r2 += i;
    tail.lower += i;
    tail.upper += i;
    tail.out += i;
    tail.n = a.n - i;
    candidate_scalar(tail);
  }
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += x[i] * x[i];
  return total;
}

double weighted_sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  __m256d weight = _mm256_setr_pd(1.0, 2.0, 3.0, 4.0);
  const __m256d step = _mm256_set1_pd(static_cast<double>(kLanes));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(weight, _mm256_mul_pd(v, v)));
    weight = _mm256_add_pd(weight, step);
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<double>(i + 1) * (x[i] * x[i]);
  return total;
}

}  // namespace sjaya::kernels::detail
