#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace sjaya::kernels {

namespace {

const KernelTable kScalar{Isa::Scalar, &detail::candidate_scalar, &detail::sum_squares_scalar,
                          &detail::weighted_sum_squares_scalar};

#if defined(SJAYA_WITH_AVX2)
const KernelTable kAvx2{Isa::Avx2, &detail::candidate_avx2, &detail::sum_squares_avx2,
                        &detail::weighted_sum_squares_avx2};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const KernelTable* choose_default() noexcept {
  if (const char* env = std::getenv("SJAYA_SIMD"); env != nullptr && std::string(env) == "scalar")
    return &kScalar;
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(SJAYA_WITH_AVX2)
  return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const KernelTable* chosen = choose_default();
    g_active.compare_exchange_strong(t, chosen, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

bool select(Isa isa) noexcept {
  const KernelTable* t = isa == Isa::Scalar ? &kScalar : avx2_table();
  if (t == nullptr) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

std::string_view name(Isa isa) noexcept { return isa == Isa::Scalar ? "scalar" : "avx2"; }

}  // namespace sjaya::kernels
