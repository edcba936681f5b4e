#pragma once

// Data-parallel inner loops of the optimizer and of the quadratic benchmarks.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// implementation. The scalar reductions accumulate in the same four-lane
// order the vector code uses, so both paths produce bit-identical results and
// a run is reproducible regardless of which path the CPU selects.

#include <cstddef>
#include <span>
#include <string_view>

namespace sjaya::kernels {

enum class Isa { Scalar, Avx2 };

/// Candidate generation plus clamping, one coordinate per lane:
///   out[i] = clamp(cur[i] + r1[i]*(best[i] - |cur[i]|) - r2[i]*(worst[i] - |cur[i]|),
///                  lower[i], upper[i])
/// All spans have the same length; `out` may not alias the inputs.
struct CandidateArgs {
  const double* current;
  const double* best;
  const double* worst;
  const double* r1;
  const double* r2;
  const double* lower;
  const double* upper;
  double* out;
  std::size_t n;
};

struct KernelTable {
  Isa isa;
  void (*candidate)(const CandidateArgs&);
  /// sum x[i]^2
  double (*sum_squares)(const double* x, std::size_t n);
  /// sum (i+1) * x[i]^2
  double (*weighted_sum_squares)(const double* x, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// The table used by the library. Chosen on first use: AVX2 when available,
/// unless the environment variable SJAYA_SIMD is set to "scalar".
const KernelTable& active() noexcept;

/// Force a specific implementation. Returns false (and changes nothing) when
/// the requested ISA is unavailable.
bool select(Isa isa) noexcept;

std::string_view name(Isa isa) noexcept;

}  // namespace sjaya::kernels
