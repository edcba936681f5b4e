#pragma once

#include "sjaya/kernels.hpp"

namespace sjaya::kernels::detail {

inline constexpr std::size_t kLanes = 4;

void candidate_scalar(const CandidateArgs& a);
double sum_squares_scalar(const double* x, std::size_t n);
double weighted_sum_squares_scalar(const double* x, std::size_t n);

#if defined(SJAYA_WITH_AVX2)
void candidate_avx2(const CandidateArgs& a);
double sum_squares_avx2(const double* x, std::size_t n);
double weighted_sum_squares_avx2(const double* x, std::size_t n);
#endif

}  // namespace sjaya::kernels::detail
